use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{GScalar, Jet1, MultiPoly, ParamPoint, ScalarError};

/// A quotient of polynomials, stored unreduced.
///
/// Equality is decided by cross-multiplication. Only constant denominators are
/// folded into the numerator.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: GScalar) -> Self {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(MultiPoly::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                let inv = c.inv().expect("nonzero denominator");
                return RatFunc {
                    num: self.num.scale(&inv),
                    den: MultiPoly::one(),
                };
            }
        }
        if self.num == self.den {
            return RatFunc::one();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn conj(&self) -> Self {
        RatFunc {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    pub fn scale(&self, c: &GScalar) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn eval(&self, pt: &ParamPoint) -> Result<GScalar, ScalarError> {
        let d = self.den.eval(pt);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval(pt) * d.inv().expect("checked nonzero"))
    }

    /// Value and first partials at `base` via the quotient rule.
    pub fn jet_lift(&self, base: &ParamPoint) -> Result<Jet1, ScalarError> {
        let d = self.den.eval_jet(base);
        let inv = d.try_inv().ok_or(ScalarError::Pole)?;
        Ok(self.num.eval_jet(base) * inv)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .normalized();
        }
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cancel a factor that appears verbatim across the product.
        if self.num == rhs.den {
            return RatFunc {
                num: rhs.num.clone(),
                den: self.den.clone(),
            }
            .normalized();
        }
        if self.den == rhs.num {
            return RatFunc {
                num: self.num.clone(),
                den: rhs.den.clone(),
            }
            .normalized();
        }
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -self.clone()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
