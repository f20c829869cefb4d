use std::sync::{Arc, OnceLock};

use iwa_deformation::{hermitian_matrix, omega11, ComplexStructure};
use iwa_exterior::mask::{self, Mask};
use iwa_exterior::{Form, Frame};
use iwa_scalars::{GScalar, ParamPoint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ops::Operators;
use crate::HodgeError;

pub type Gram = [[GScalar; 3]; 3];

/// An invariant Hermitian metric ω = i Σ g_jk φ_j∧φ̄_k on a complex
/// structure with (1,0) frame φ.
///
/// Internally the metric is diagonalised over ℚ(i) by g = L diag(δ) L*,
/// giving an orthogonal (1,0) coframe ψ_m = Σ_j L_jm φ_j with |ψ_m|² = 1/δ_m.
#[derive(Clone)]
pub struct Metric {
    structure: ComplexStructure,
    gram: Gram,
    delta: [BigRational; 3],
    psi: Arc<Frame<GScalar>>,
    ops: Arc<OnceLock<Operators>>,
}

impl std::fmt::Debug for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Metric")
            .field("t", &self.structure.t().to_string())
            .field("delta", &self.delta)
            .finish()
    }
}

fn identity_gram() -> Gram {
    std::array::from_fn(|j| std::array::from_fn(|k| if j == k { GScalar::one() } else { GScalar::zero() }))
}

/// g = L diag(δ) L* with L unit lower triangular.
fn ldl(g: &Gram) -> Result<([[GScalar; 3]; 3], [BigRational; 3]), HodgeError> {
    for j in 0..3 {
        for k in 0..3 {
            if g[j][k] != g[k][j].conj() {
                return Err(HodgeError::NotHermitian);
            }
        }
    }
    let mut l = identity_gram();
    let mut delta: [BigRational; 3] = std::array::from_fn(|_| BigRational::zero());
    for j in 0..3 {
        let mut dj = g[j][j].clone();
        for m in 0..j {
            dj = dj - GScalar::from_rational(l[j][m].norm_sqr() * &delta[m]);
        }
        let dj = dj.re().clone();
        if !dj.is_positive() {
            return Err(HodgeError::NotPositive(j));
        }
        delta[j] = dj;
        for i in j + 1..3 {
            let mut s = g[i][j].clone();
            for m in 0..j {
                s = s - l[i][m].clone() * l[j][m].conj() * GScalar::from_rational(delta[m].clone());
            }
            l[i][j] = s * GScalar::from_rational(BigRational::one() / &delta[j]);
        }
    }
    Ok((l, delta))
}

impl Metric {
    /// ω = i Σ g_jk φ_j∧φ̄_k in the frame of `structure`.
    pub fn new(structure: ComplexStructure, gram: Gram) -> Result<Self, HodgeError> {
        let (l, delta) = ldl(&gram)?;
        let phi = structure.covectors();
        let hol: Vec<Form<GScalar>> = (0..3)
            .map(|m| (0..3).fold(Form::zero(), |acc, j| acc + phi[j].scale(&l[j][m])))
            .collect();
        let mut covs = hol.clone();
        covs.extend(hol.iter().map(Form::conj));
        let psi = Frame::from_covectors(&covs)?;
        Ok(Metric {
            structure,
            gram,
            delta,
            psi: Arc::new(psi),
            ops: Arc::new(OnceLock::new()),
        })
    }

    /// ω_t = iα_t∧ᾱ_t + iβ_t∧β̄_t + iγ_t∧γ̄_t on X_t.
    pub fn canonical(structure: ComplexStructure) -> Self {
        Metric::new(structure, identity_gram()).expect("identity Gram is positive")
    }

    pub fn standard() -> Self {
        Metric::canonical(ComplexStructure::standard())
    }

    /// A real form ω of J-type (1,1) read as a metric on J.
    pub fn from_form(structure: ComplexStructure, omega: &Form<GScalar>) -> Result<Self, HodgeError> {
        if omega.conj() != *omega {
            return Err(HodgeError::NotMetricForm("not real".into()));
        }
        let v = structure.frame().to_frame(omega);
        if v.terms().any(|(m, _)| mask::bidegree(m) != (1, 1)) {
            return Err(HodgeError::NotMetricForm("not of type (1,1)".into()));
        }
        let mi = -GScalar::i();
        let gram = std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let m: Mask = (1 << j) | (1 << (k + 3));
                let sign = mask::wedge_sign(1 << j, 1 << (k + 3));
                v.coeff(m) * &mi * &GScalar::from_int(sign as i64)
            })
        });
        Metric::new(structure, gram)
    }

    /// The metric ω_t^{1,1} on X₀.
    pub fn omega11(t: &ParamPoint) -> Result<Self, HodgeError> {
        let g = hermitian_matrix(&omega11(t));
        Metric::new(ComplexStructure::standard(), g)
    }

    pub fn structure(&self) -> &ComplexStructure {
        &self.structure
    }

    pub fn gram(&self) -> &Gram {
        &self.gram
    }

    /// Pivots δ_m of g = L diag(δ) L*; all positive.
    pub fn pivots(&self) -> &[BigRational; 3] {
        &self.delta
    }

    /// Leading principal minors of the Gram matrix.
    pub fn leading_minors(&self) -> [BigRational; 3] {
        let mut acc = BigRational::one();
        std::array::from_fn(|k| {
            acc = &acc * &self.delta[k];
            acc.clone()
        })
    }

    pub fn is_positive(&self) -> bool {
        self.delta.iter().all(|d| d.is_positive())
    }

    pub fn omega(&self) -> Form<GScalar> {
        let phi = self.structure.covectors();
        let i = GScalar::i();
        let mut out = Form::zero();
        for j in 0..3 {
            for k in 0..3 {
                out = out + phi[j].wedge(&phi[k + 3]).scale(&(self.gram[j][k].clone() * i.clone()));
            }
        }
        out
    }

    pub(crate) fn psi(&self) -> &Frame<GScalar> {
        &self.psi
    }

    /// |ψ_S|² for a ψ-monomial.
    pub(crate) fn weight(&self, m: Mask) -> BigRational {
        mask::indices(m)
            .into_iter()
            .fold(BigRational::one(), |acc, k| acc / &self.delta[k % 3])
    }

    pub(crate) fn operators(&self) -> &Operators {
        self.ops.get_or_init(|| Operators::build(self))
    }
}
