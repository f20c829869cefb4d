use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{GScalar, Jet1, MultiPoly, RatFunc};

/// Coefficient ring for forms and matrices.
///
/// `try_inv` returns `None` for elements that are not units at this level
/// (zero, or a non-constant polynomial).
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn from_scalar(c: GScalar) -> Self;
    fn try_inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(GScalar::from_int(n))
    }

    fn i() -> Self {
        Self::from_scalar(GScalar::i())
    }

    fn scale(&self, c: &GScalar) -> Self {
        self.clone() * Self::from_scalar(c.clone())
    }
}

impl Coeff for GScalar {
    fn zero() -> Self {
        GScalar::zero()
    }
    fn one() -> Self {
        GScalar::one()
    }
    fn is_zero(&self) -> bool {
        GScalar::is_zero(self)
    }
    fn conj(&self) -> Self {
        GScalar::conj(self)
    }
    fn from_scalar(c: GScalar) -> Self {
        c
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn scale(&self, c: &GScalar) -> Self {
        self * c
    }
}

impl Coeff for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn conj(&self) -> Self {
        MultiPoly::conj(self)
    }
    fn from_scalar(c: GScalar) -> Self {
        MultiPoly::constant(c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.inv())
            .map(MultiPoly::constant)
    }
    fn scale(&self, c: &GScalar) -> Self {
        MultiPoly::scale(self, c)
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn conj(&self) -> Self {
        RatFunc::conj(self)
    }
    fn from_scalar(c: GScalar) -> Self {
        RatFunc::constant(c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn scale(&self, c: &GScalar) -> Self {
        RatFunc::scale(self, c)
    }
}

impl Coeff for Jet1 {
    fn zero() -> Self {
        Jet1::constant(GScalar::zero())
    }
    fn one() -> Self {
        Jet1::constant(GScalar::one())
    }
    fn is_zero(&self) -> bool {
        Jet1::is_zero(self)
    }
    fn conj(&self) -> Self {
        Jet1::conj(self)
    }
    fn from_scalar(c: GScalar) -> Self {
        Jet1::constant(c)
    }
    fn try_inv(&self) -> Option<Self> {
        Jet1::try_inv(self)
    }
    fn scale(&self, c: &GScalar) -> Self {
        Jet1::scale(self, c)
    }
}
