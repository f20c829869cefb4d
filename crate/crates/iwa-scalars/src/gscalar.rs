use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ScalarError;

/// An element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GScalar {
    re: BigRational,
    im: BigRational,
}

impl GScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GScalar { re, im }
    }

    pub fn zero() -> Self {
        GScalar::default()
    }

    pub fn one() -> Self {
        GScalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GScalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GScalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GScalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(a/b) + (c/d) i` from small integers.
    pub fn gauss(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(b != 0 && d != 0, "zero denominator");
        GScalar::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        GScalar::new(r, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GScalar::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GScalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, other: &GScalar) -> Result<GScalar, ScalarError> {
        other
            .inv()
            .map(|inv| self * &inv)
            .ok_or(ScalarError::DivisionByZero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = GScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        GScalar::new(&self.re * r, &self.im * r)
    }

    /// Lossy conversion for inspection output only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<i64> for GScalar {
    fn from(n: i64) -> Self {
        GScalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GScalar> for &'a GScalar {
            type Output = GScalar;
            fn $method(self, rhs: &'a GScalar) -> GScalar {
                let f: fn(&GScalar, &GScalar) -> GScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<GScalar> for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: GScalar) -> GScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GScalar> for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: &'a GScalar) -> GScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GScalar::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GScalar::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| GScalar::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl Div for GScalar {
    type Output = GScalar;
    /// Panics on division by zero; use `checked_div` on untrusted input.
    fn div(self, rhs: GScalar) -> GScalar {
        self.checked_div(&rhs).expect("GScalar division by zero")
    }
}

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re, -self.im)
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GScalar> for GScalar {
    fn add_assign(&mut self, rhs: &GScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GScalar> for GScalar {
    fn sub_assign(&mut self, rhs: &GScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GScalar> for GScalar {
    fn mul_assign(&mut self, rhs: &GScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &BigRational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rational(im))
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", fmt_rational(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}", imag(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}", fmt_rational(&self.re), imag(&self.im))
        } else {
            write!(f, "{}+{}", fmt_rational(&self.re), imag(&self.im))
        }
    }
}

impl fmt::Debug for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `n` or `n/d` with an optional sign.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid_int = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix(['+', '-']).unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || !valid_int(den, false) {
        return Err(err());
    }
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for GScalar {
    type Err = ScalarError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ScalarError::Parse(input.to_string());
        if s.is_empty() {
            return Err(err());
        }
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(&s).map(GScalar::from_rational).map_err(|_| err());
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part).map_err(|_| err())?
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other).map_err(|_| err())?,
        };
        Ok(GScalar::new(re, im))
    }
}

impl Serialize for GScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        for lit in ["0", "3", "-1/2", "i", "-i", "1/2i", "-1/2+3/4i", "2-i", "7/3-5/6i"] {
            let z: GScalar = lit.parse().unwrap();
            assert_eq!(z.to_string(), lit);
        }
    }

    #[test]
    fn literal_variants() {
        assert_eq!("+3/6".parse::<GScalar>().unwrap(), GScalar::from_ratio(1, 2));
        assert_eq!("1+i".parse::<GScalar>().unwrap(), GScalar::gauss(1, 1, 1, 1));
        assert_eq!(" -1/2 + 3/4i ".parse::<GScalar>().unwrap(), GScalar::gauss(-1, 2, 3, 4));
        for bad in ["", "1/0", "a", "1//2", "i+1", "1/-2", "--1"] {
            assert!(bad.parse::<GScalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn field_ops() {
        let z = GScalar::gauss(1, 2, 1, 3);
        assert_eq!(z.norm_sqr(), BigRational::new(13.into(), 36.into()));
        assert_eq!(&z * &z.inv().unwrap(), GScalar::one());
        assert_eq!(&GScalar::i() * &GScalar::i(), GScalar::from_int(-1));
        assert!(GScalar::zero().inv().is_none());
    }
}
