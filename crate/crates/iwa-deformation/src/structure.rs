use std::fmt;

use iwa_exterior::{Form, Frame};
use iwa_scalars::{Coeff, GScalar, Jet1, Matrix, MultiPoly, ParamPoint, ParamVar};
use serde::{Deserialize, Serialize};

use crate::DeformationError;

/// The six Kuranishi covectors (α_t, β_t, γ_t, ᾱ_t, β̄_t, γ̄_t) from values of
/// the twelve parameters in `ParamVar` order (t11..t32, then s11..s32):
///
/// α_t = α + t11 ᾱ + t12 β̄, β_t = β + t21 ᾱ + t22 β̄,
/// γ_t = γ + t31 ᾱ + t32 β̄ − D γ̄, D = t11 t22 − t12 t21.
pub fn kuranishi_covectors<C: Coeff>(v: &[C]) -> [Form<C>; 6] {
    assert_eq!(v.len(), 12);
    let (t, s) = v.split_at(6);
    let d = t[0].clone() * t[3].clone() - t[1].clone() * t[2].clone();
    let db = s[0].clone() * s[3].clone() - s[1].clone() * s[2].clone();
    let one = C::one;
    let row = |c: [C; 6]| Form::from_terms(c.into_iter().enumerate().map(|(k, x)| (1u8 << k, x)));
    let zero = C::zero;
    [
        row([one(), zero(), zero(), t[0].clone(), t[1].clone(), zero()]),
        row([zero(), one(), zero(), t[2].clone(), t[3].clone(), zero()]),
        row([zero(), zero(), one(), t[4].clone(), t[5].clone(), -d]),
        row([s[0].clone(), s[1].clone(), zero(), one(), zero(), zero()]),
        row([s[2].clone(), s[3].clone(), zero(), zero(), one(), zero()]),
        row([s[4].clone(), s[5].clone(), -db, zero(), zero(), one()]),
    ]
}

/// Covectors with the parameters kept as formal polynomial variables.
pub fn poly_covectors() -> [Form<MultiPoly>; 6] {
    let vars: Vec<MultiPoly> = ParamVar::ALL.iter().map(|&v| MultiPoly::var(v)).collect();
    kuranishi_covectors(&vars)
}

/// First-order jets of the frame at `base`.
pub fn jet_frame(base: &ParamPoint) -> Result<Frame<Jet1>, DeformationError> {
    let vars: Vec<Jet1> = ParamVar::ALL.iter().map(|&v| Jet1::var(base, v)).collect();
    Ok(Frame::from_covectors(&kuranishi_covectors(&vars))?)
}

fn rows_of<C: Coeff>(covs: &[Form<C>; 6]) -> Matrix<C> {
    Matrix::from_rows(
        covs.iter()
            .map(|f| (0..6).map(|k| f.coeff(1 << k)).collect())
            .collect(),
    )
}

/// A point of the Kuranishi family together with its frame.
#[derive(Clone, Debug)]
pub struct ComplexStructure {
    t: ParamPoint,
    frame: Frame<GScalar>,
}

impl ComplexStructure {
    pub fn new(t: &ParamPoint) -> Result<Self, DeformationError> {
        let covs = kuranishi_covectors(&t.values12());
        let frame = Frame::new(rows_of(&covs))?;
        Ok(ComplexStructure {
            t: t.clone(),
            frame,
        })
    }

    pub fn standard() -> Self {
        ComplexStructure {
            t: ParamPoint::zero(),
            frame: Frame::identity(),
        }
    }

    pub fn t(&self) -> &ParamPoint {
        &self.t
    }

    pub fn frame(&self) -> &Frame<GScalar> {
        &self.frame
    }

    /// φ_k in the fixed coframe (0..6 ↔ α_t, β_t, γ_t, ᾱ_t, β̄_t, γ̄_t).
    pub fn covector(&self, k: usize) -> Form<GScalar> {
        self.frame.covector(k)
    }

    pub fn covectors(&self) -> [Form<GScalar>; 6] {
        std::array::from_fn(|k| self.covector(k))
    }

    /// The holomorphic volume form u_t = α_t∧β_t∧γ_t.
    pub fn volume_form(&self) -> Form<GScalar> {
        self.frame.frame_monomial(iwa_exterior::mask::HOL).clone()
    }

    pub fn nakamura_class(&self) -> NakamuraClass {
        nakamura_class(&self.t)
    }
}

pub fn build_structure(t: &ParamPoint) -> Result<ComplexStructure, DeformationError> {
    ComplexStructure::new(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NakamuraClass {
    /// Complex parallelisable: t11 = t12 = t21 = t22 = 0.
    Parallelisable,
    ClassII,
    ClassIII,
}

impl fmt::Display for NakamuraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NakamuraClass::Parallelisable => "i",
            NakamuraClass::ClassII => "ii",
            NakamuraClass::ClassIII => "iii",
        })
    }
}

pub fn nakamura_class(t: &ParamPoint) -> NakamuraClass {
    if t.holomorphic()[..4].iter().all(GScalar::is_zero) {
        NakamuraClass::Parallelisable
    } else if t.d().is_zero() {
        NakamuraClass::ClassII
    } else {
        NakamuraClass::ClassIII
    }
}
