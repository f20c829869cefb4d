use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::{GScalar, ParamPoint, ParamVar};

/// Truncated first-order jet at a base point: value plus the twelve partials
/// ∂/∂t_{iλ}, ∂/∂s_{iλ}.
///
/// Constants carry no base; a jet adopts the base of whatever it is combined
/// with. Combining jets at different bases is a logic error and panics.
#[derive(Clone)]
pub struct Jet1 {
    base: Option<Arc<ParamPoint>>,
    value: GScalar,
    partials: Vec<GScalar>,
}

impl Jet1 {
    pub fn from_parts(base: Option<ParamPoint>, value: GScalar, partials: Vec<GScalar>) -> Self {
        assert_eq!(partials.len(), 12);
        Jet1 {
            base: base.map(Arc::new),
            value,
            partials,
        }
    }

    pub fn constant(c: GScalar) -> Self {
        Jet1 {
            base: None,
            value: c,
            partials: vec![GScalar::zero(); 12],
        }
    }

    /// The coordinate function `v` at `base`.
    pub fn var(base: &ParamPoint, v: ParamVar) -> Self {
        let mut partials = vec![GScalar::zero(); 12];
        partials[v.index()] = GScalar::one();
        Jet1 {
            base: Some(Arc::new(base.clone())),
            value: base.get(v),
            partials,
        }
    }

    pub fn base(&self) -> Option<&ParamPoint> {
        self.base.as_deref()
    }

    pub fn value(&self) -> &GScalar {
        &self.value
    }

    pub fn partial(&self, v: ParamVar) -> &GScalar {
        &self.partials[v.index()]
    }

    pub fn partials(&self) -> &[GScalar] {
        &self.partials
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero() && self.partials.iter().all(GScalar::is_zero)
    }

    /// True when every anti-holomorphic partial vanishes.
    pub fn is_holomorphic(&self) -> bool {
        ParamVar::ANTIHOLOMORPHIC
            .iter()
            .all(|v| self.partial(*v).is_zero())
    }

    fn merged_base(&self, other: &Jet1) -> Option<Arc<ParamPoint>> {
        match (&self.base, &other.base) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b) || a == b, "jets at different base points");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    /// Conjugation: ∂conj(f)/∂t_k = conj(∂f/∂s_k) and vice versa.
    pub fn conj(&self) -> Self {
        let partials = (0..12)
            .map(|k| self.partials[(k + 6) % 12].conj())
            .collect();
        Jet1 {
            base: self.base.clone(),
            value: self.value.conj(),
            partials,
        }
    }

    pub fn scale(&self, c: &GScalar) -> Self {
        Jet1 {
            base: self.base.clone(),
            value: &self.value * c,
            partials: self.partials.iter().map(|p| p * c).collect(),
        }
    }

    pub fn try_inv(&self) -> Option<Self> {
        let inv = self.value.inv()?;
        let minus_inv_sq = -(&inv * &inv);
        Some(Jet1 {
            base: self.base.clone(),
            value: inv,
            partials: self.partials.iter().map(|p| p * &minus_inv_sq).collect(),
        })
    }
}

impl PartialEq for Jet1 {
    fn eq(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.base, &other.base) {
            if a != b {
                return false;
            }
        }
        self.value == other.value && self.partials == other.partials
    }
}

impl<'a> Add<&'a Jet1> for &'a Jet1 {
    type Output = Jet1;
    fn add(self, rhs: &'a Jet1) -> Jet1 {
        Jet1 {
            base: self.merged_base(rhs),
            value: &self.value + &rhs.value,
            partials: self
                .partials
                .iter()
                .zip(&rhs.partials)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Jet1> for &'a Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: &'a Jet1) -> Jet1 {
        Jet1 {
            base: self.merged_base(rhs),
            value: &self.value - &rhs.value,
            partials: self
                .partials
                .iter()
                .zip(&rhs.partials)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Jet1> for &'a Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: &'a Jet1) -> Jet1 {
        Jet1 {
            base: self.merged_base(rhs),
            value: &self.value * &rhs.value,
            partials: self
                .partials
                .iter()
                .zip(&rhs.partials)
                .map(|(da, db)| da * &rhs.value + &self.value * db)
                .collect(),
        }
    }
}

impl Add for Jet1 {
    type Output = Jet1;
    fn add(self, rhs: Jet1) -> Jet1 {
        &self + &rhs
    }
}

impl Sub for Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: Jet1) -> Jet1 {
        &self - &rhs
    }
}

impl Mul for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: Jet1) -> Jet1 {
        &self * &rhs
    }
}

impl Neg for Jet1 {
    type Output = Jet1;
    fn neg(self) -> Jet1 {
        Jet1 {
            base: self.base,
            value: -self.value,
            partials: self.partials.into_iter().map(|p| -p).collect(),
        }
    }
}

impl fmt::Debug for Jet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet1({}", self.value)?;
        for v in ParamVar::ALL {
            let p = self.partial(v);
            if !p.is_zero() {
                write!(f, ", d/d{v}={p}")?;
            }
        }
        f.write_str(")")
    }
}
