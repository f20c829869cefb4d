use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{GScalar, ParamVar, ScalarError};

/// A point of the Kuranishi polydisc: the six values `t11..t32`.
///
/// Conjugate parameters are never stored; `get(S..)` returns `conj(t..)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoint {
    t: [GScalar; 6],
}

impl ParamPoint {
    pub fn zero() -> Self {
        ParamPoint::default()
    }

    pub fn new(t: [GScalar; 6]) -> Self {
        ParamPoint { t }
    }

    pub fn with(mut self, var: ParamVar, value: GScalar) -> Self {
        self.set(var, value);
        self
    }

    /// Sets a holomorphic parameter (a conjugate one sets the conjugate value).
    pub fn set(&mut self, var: ParamVar, value: GScalar) {
        if var.is_holomorphic() {
            self.t[var.index()] = value;
        } else {
            self.t[var.conj().index()] = value.conj();
        }
    }

    pub fn get(&self, var: ParamVar) -> GScalar {
        if var.is_holomorphic() {
            self.t[var.index()].clone()
        } else {
            self.t[var.conj().index()].conj()
        }
    }

    pub fn t(&self, i: usize, lambda: usize) -> &GScalar {
        &self.t[ParamVar::t(i, lambda).index()]
    }

    /// Values of all twelve variables in `ParamVar::ALL` order.
    pub fn values12(&self) -> Vec<GScalar> {
        ParamVar::ALL.iter().map(|&v| self.get(v)).collect()
    }

    pub fn holomorphic(&self) -> &[GScalar; 6] {
        &self.t
    }

    /// D(t) = t11 t22 − t12 t21.
    pub fn d(&self) -> GScalar {
        self.t(1, 1) * self.t(2, 2) - self.t(1, 2) * self.t(2, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(GScalar::is_zero)
    }

    /// On the essential slice t31 = t32 = 0.
    pub fn is_essential(&self) -> bool {
        self.t[4].is_zero() && self.t[5].is_zero()
    }

    pub fn essential(mut self) -> Self {
        self.t[4] = GScalar::zero();
        self.t[5] = GScalar::zero();
        self
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        ParamVar::HOLOMORPHIC
            .iter()
            .map(|v| (v.name().to_string(), self.get(*v).to_string()))
            .collect()
    }

    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self, ScalarError> {
        let mut p = ParamPoint::zero();
        for (k, v) in map {
            let var: ParamVar = k.parse()?;
            if !var.is_holomorphic() {
                return Err(ScalarError::UnknownParam(k.clone()));
            }
            p.set(var, v.parse()?);
        }
        Ok(p)
    }
}

/// `0`, or a comma-separated list `t11=1/2, t22=1/3i`.
impl FromStr for ParamPoint {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut p = ParamPoint::zero();
        if s == "0" || s.is_empty() {
            return Ok(p);
        }
        for item in s.split(',') {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| ScalarError::Parse(item.to_string()))?;
            let var: ParamVar = k.trim().parse()?;
            if !var.is_holomorphic() {
                return Err(ScalarError::UnknownParam(k.trim().to_string()));
            }
            p.set(var, v.parse()?);
        }
        Ok(p)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = ParamVar::HOLOMORPHIC
            .iter()
            .filter(|v| !self.get(**v).is_zero())
            .map(|v| format!("{}={}", v.name(), self.get(*v)))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoint({self})")
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParamPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        ParamPoint::from_map(&map).map_err(serde::de::Error::custom)
    }
}

/// Parameters of the seeded rational sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    /// Largest denominator of a real or imaginary part.
    pub max_den: u32,
    /// Zero t31, t32.
    pub essential: bool,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            seed: 0,
            count: 20,
            max_den: 8,
            essential: true,
        }
    }
}

fn sample_rational(rng: &mut ChaCha8Rng, max_den: u32) -> BigRational {
    // |n/d| <= 1/3 keeps every sampled point well inside the positivity domain.
    let d = rng.gen_range(1..=max_den.max(1)) as i64;
    let bound = d / 3;
    let n = rng.gen_range(-bound..=bound);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reproducible points; identical across runs and platforms for a given spec.
pub fn sample_points(spec: &SampleSpec) -> Vec<ParamPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let mut p = ParamPoint::zero();
            for var in ParamVar::HOLOMORPHIC {
                let re = sample_rational(&mut rng, spec.max_den);
                let im = sample_rational(&mut rng, spec.max_den);
                p.set(var, GScalar::new(re, im));
            }
            if spec.essential {
                p.essential()
            } else {
                p
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: ParamPoint = "t11=1/2, t22=1/3i".parse().unwrap();
        assert_eq!(p.to_string(), "t11=1/2,t22=1/3i");
        assert_eq!(p.get(ParamVar::S22), GScalar::gauss(0, 1, -1, 3));
        assert_eq!("0".parse::<ParamPoint>().unwrap(), ParamPoint::zero());
        assert!("s11=1".parse::<ParamPoint>().is_err());
        assert!("t41=1".parse::<ParamPoint>().is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let spec = SampleSpec { seed: 7, ..SampleSpec::default() };
        assert_eq!(sample_points(&spec), sample_points(&spec));
        assert!(sample_points(&spec).iter().all(ParamPoint::is_essential));
    }
}
