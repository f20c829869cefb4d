use iwa_cohomology::linalg::{self, Vector};
use iwa_deformation::kuranishi_covectors;
use iwa_exterior::mask::{self, ALPHA, ALPHA_BAR, BETA, BETA_BAR};
use iwa_exterior::Form;
use iwa_scalars::{GScalar, ParamPoint};

use crate::coords::volume_form_from;
use crate::pairing::{labelled, PairingKind, PairingMatrix};
use crate::MirrorError;

const TORUS: u8 = ALPHA | BETA | ALPHA_BAR | BETA_BAR;

/// The exterior algebra on α_t, β_t, ᾱ_t, β̄_t with zero differential.
#[derive(Clone, Debug)]
pub struct TorusModel {
    pub t: ParamPoint,
    /// α_t, β_t, ᾱ_t, β̄_t.
    pub covectors: [Form<GScalar>; 4],
}

fn two_form_masks() -> Vec<u8> {
    mask::of_degree(2).into_iter().filter(|m| m & !TORUS == 0).collect()
}

impl TorusModel {
    pub fn new(t: &ParamPoint) -> Self {
        let c = kuranishi_covectors(&t.values12());
        TorusModel {
            t: t.clone(),
            covectors: [c[0].clone(), c[1].clone(), c[3].clone(), c[4].clone()],
        }
    }

    fn w(&self, a: usize, b: usize) -> Form<GScalar> {
        self.covectors[a].wedge(&self.covectors[b])
    }

    pub fn h20(&self) -> Vec<Form<GScalar>> {
        vec![self.w(0, 1)]
    }

    pub fn h11(&self) -> Vec<Form<GScalar>> {
        vec![self.w(0, 2), self.w(0, 3), self.w(1, 2), self.w(1, 3)]
    }

    pub fn h02(&self) -> Vec<Form<GScalar>> {
        vec![self.w(2, 3)]
    }

    fn rank(forms: &[Form<GScalar>]) -> usize {
        let masks = two_form_masks();
        let v: Vec<Vector> = forms.iter().map(|u| u.to_vec(&masks)).collect();
        linalg::rank(&v)
    }

    pub fn h2_dimension(&self) -> usize {
        let mut all = self.h20();
        all.extend(self.h11());
        all.extend(self.h02());
        Self::rank(&all)
    }

    /// (dim F², dim F¹).
    pub fn filtration_dims(&self) -> (usize, usize) {
        let mut f1 = self.h20();
        f1.extend(self.h11());
        (Self::rank(&self.h20()), Self::rank(&f1))
    }

    /// H^{2,0}(B_t)∧γ_t = u_t.
    pub fn h20_matches_h30(&self) -> bool {
        let c = kuranishi_covectors(&self.t.values12());
        self.w(0, 1).wedge(&c[2]) == volume_form_from(&self.t.values12())
    }
}

/// H_B on αβ, iαᾱ+iββ̄, iαᾱ−iββ̄, iαβ̄, iβᾱ.
pub fn hb_matrix_b0() -> Result<PairingMatrix, MirrorError> {
    let m = |a: u8, b: u8, c: GScalar| {
        Form::monomial(a, GScalar::one()).wedge(&Form::monomial(b, GScalar::one())).scale(&c)
    };
    let i = GScalar::i;
    let ia = m(ALPHA, ALPHA_BAR, i());
    let ib = m(BETA, BETA_BAR, i());
    PairingMatrix::new(
        PairingKind::HB,
        &[
            labelled("al.be", m(ALPHA, BETA, GScalar::one())),
            labelled("i al.al~ + i be.be~", ia.clone() + ib.clone()),
            labelled("i al.al~ - i be.be~", ia - ib),
            labelled("i al.be~", m(ALPHA, BETA_BAR, i())),
            labelled("i be.al~", m(BETA, ALPHA_BAR, i())),
        ],
    )
}
