use iwa_exterior::mask::{self, ALPHA, ALPHA_BAR, BETA, BETA_BAR, GAMMA};
use iwa_exterior::{render_form, Form, Frame};
use iwa_scalars::{Coeff, GScalar, MultiPoly, ParamPoint, RatFunc};
use serde::Serialize;

use crate::{nakamura_class, ComplexStructure, DeformationError, NakamuraClass};

/// Coefficients of the structure equation
///
/// dγ_t = σ12 α_t∧β_t + σ11̄ α_t∧ᾱ_t + σ12̄ α_t∧β̄_t + σ21̄ β_t∧ᾱ_t + σ22̄ β_t∧β̄_t.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sigma<C> {
    pub sigma12: C,
    pub sigma11b: C,
    pub sigma12b: C,
    pub sigma21b: C,
    pub sigma22b: C,
}

/// Frame masks for the five 2-forms of the structure equation.
pub const SIGMA_MASKS: [mask::Mask; 5] = [
    ALPHA | BETA,
    ALPHA | ALPHA_BAR,
    ALPHA | BETA_BAR,
    BETA | ALPHA_BAR,
    BETA | BETA_BAR,
];

pub const SIGMA_NAMES: [&str; 5] = ["sigma12", "sigma11b", "sigma12b", "sigma21b", "sigma22b"];

impl<C: Coeff> Sigma<C> {
    pub fn to_array(&self) -> [C; 5] {
        [
            self.sigma12.clone(),
            self.sigma11b.clone(),
            self.sigma12b.clone(),
            self.sigma21b.clone(),
            self.sigma22b.clone(),
        ]
    }

    pub fn from_array([sigma12, sigma11b, sigma12b, sigma21b, sigma22b]: [C; 5]) -> Self {
        Sigma {
            sigma12,
            sigma11b,
            sigma12b,
            sigma21b,
            sigma22b,
        }
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> Sigma<D> {
        Sigma {
            sigma12: f(&self.sigma12),
            sigma11b: f(&self.sigma11b),
            sigma12b: f(&self.sigma12b),
            sigma21b: f(&self.sigma21b),
            sigma22b: f(&self.sigma22b),
        }
    }

    /// The right-hand side of the structure equation in frame coordinates.
    pub fn assemble(&self) -> Form<C> {
        Form::from_terms(SIGMA_MASKS.iter().copied().zip(self.to_array()))
    }
}

/// Reads the σ's off d(γ_t) written in the frame; any other component is a
/// violation of the structure equation.
pub fn sigma_from_frame<C: Coeff>(frame: &Frame<C>) -> Result<Sigma<C>, DeformationError> {
    let dg = frame.d_frame_monomial(GAMMA);
    let rest = dg.filter(|m| !SIGMA_MASKS.contains(&m));
    if !rest.is_zero() {
        return Err(DeformationError::StructureEquationViolation(format!(
            "{} extra terms",
            rest.num_terms()
        )));
    }
    Ok(Sigma::from_array(SIGMA_MASKS.map(|m| dg.coeff(m))))
}

impl ComplexStructure {
    pub fn sigma(&self) -> Result<Sigma<GScalar>, DeformationError> {
        sigma_from_frame(self.frame())
    }
}

/// Renders a violation witness for diagnostics.
pub fn structure_defect(frame: &Frame<GScalar>) -> String {
    render_form(&frame.d_frame_monomial(GAMMA).filter(|m| !SIGMA_MASKS.contains(&m)))
}

/// Which denominator to use for c(t) in the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CVariant {
    /// 1 − |t11|² − a b (t11 t̄12 + t12 t̄22) − t12 t̄21.
    Corrected,
    /// As typeset, with last term t̄12 t̄21.
    Printed,
}

/// The auxiliary functions a, b, c, λ, μ and the resulting σ's for class (ii).
#[derive(Clone, Debug)]
pub struct AppendixFunctions {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
    pub lambda: [RatFunc; 3],
    pub mu: [RatFunc; 4],
    pub sigma: Sigma<RatFunc>,
}

fn t(i: usize, l: usize) -> RatFunc {
    RatFunc::from_poly(MultiPoly::t(i, l))
}

fn s(i: usize, l: usize) -> RatFunc {
    RatFunc::from_poly(MultiPoly::s(i, l))
}

fn inv(f: &RatFunc) -> RatFunc {
    f.inv().expect("nonzero denominator polynomial")
}

pub fn appendix_functions(variant: CVariant) -> AppendixFunctions {
    let one = RatFunc::one();
    let a = inv(&(one.clone() - t(2, 2) * s(2, 2) - t(2, 1) * s(1, 2)));
    let b = t(2, 1) * s(1, 1) + t(2, 2) * s(2, 1);
    let last = match variant {
        CVariant::Corrected => t(1, 2) * s(2, 1),
        CVariant::Printed => s(1, 2) * s(2, 1),
    };
    let cross = t(1, 1) * s(1, 2) + t(1, 2) * s(2, 2);
    let c = inv(&(one.clone()
        - t(1, 1) * s(1, 1)
        - a.clone() * b.clone() * cross.clone()
        - last));
    let k = one.clone() + a.clone() * s(1, 2) * t(2, 1) + a.clone() * t(2, 2) * s(2, 2);
    let lambda = [
        -(t(1, 1) * k.clone()),
        a.clone() * cross,
        -(t(1, 2) * k.clone()),
    ];
    let bc = b.clone() * c.clone();
    let mu = [
        bc.clone(),
        lambda[0].clone() * bc.clone() - t(2, 1),
        one + lambda[1].clone() * bc.clone(),
        lambda[2].clone() * bc - t(2, 2),
    ];
    let sigma12 = -c.clone()
        + t(2, 1) * lambda[2].conj() * c.conj()
        + t(2, 2) * a.conj() * mu[3].conj();
    let ck = c.clone() * k;
    let sigma = Sigma {
        sigma12,
        sigma11b: t(2, 1) * ck.conj(),
        sigma12b: t(2, 2) * ck.conj(),
        sigma21b: -(t(1, 1) * ck.clone()),
        sigma22b: -(t(1, 2) * ck),
    };
    AppendixFunctions {
        a,
        b,
        c,
        lambda,
        mu,
        sigma,
    }
}

/// The closed-form σ's at a class (ii) point.
pub fn sigma_appendix(pt: &ParamPoint, variant: CVariant) -> Result<Sigma<GScalar>, DeformationError> {
    if nakamura_class(pt) == NakamuraClass::ClassIII {
        return Err(DeformationError::WrongClass(pt.d().to_string()));
    }
    let f = appendix_functions(variant);
    let eval = |r: &RatFunc| {
        r.eval(pt)
            .map_err(|_| DeformationError::Pole(format!("closed-form σ at {pt}")))
    };
    Ok(Sigma::from_array([
        eval(&f.sigma.sigma12)?,
        eval(&f.sigma.sigma11b)?,
        eval(&f.sigma.sigma12b)?,
        eval(&f.sigma.sigma21b)?,
        eval(&f.sigma.sigma22b)?,
    ]))
}
