use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{GScalar, Jet1, ParamPoint, ParamVar};

/// Exponent vector over `ParamVar::ALL`.
pub type Exps = [u8; 12];

/// Sparse polynomial in t11..t32, s11..s32 with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, GScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(GScalar::one())
    }

    pub fn constant(c: GScalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; 12], c);
        p
    }

    pub fn var(v: ParamVar) -> Self {
        let mut e = [0; 12];
        e[v.index()] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(e, GScalar::one());
        p
    }

    /// `t_{iλ}`.
    pub fn t(i: usize, lambda: usize) -> Self {
        MultiPoly::var(ParamVar::t(i, lambda))
    }

    /// `s_{iλ}`, the formal conjugate of `t_{iλ}`.
    pub fn s(i: usize, lambda: usize) -> Self {
        MultiPoly::var(ParamVar::s(i, lambda))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, GScalar)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: GScalar) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += &c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(e, c);
                false
            }
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &GScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GScalar> {
        match self.terms.len() {
            0 => Some(GScalar::zero()),
            1 => self.terms.get(&[0; 12]).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&k| k as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &GScalar) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal conjugation: swaps t ↔ s and conjugates coefficients.
    pub fn conj(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = [0; 12];
                    f[..6].copy_from_slice(&e[6..]);
                    f[6..].copy_from_slice(&e[..6]);
                    (f, c.conj())
                })
                .collect(),
        }
    }

    pub fn derivative(&self, v: ParamVar) -> Self {
        let k = v.index();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut f = *e;
            f[k] -= 1;
            out.add_term(f, c * &GScalar::from_int(e[k] as i64));
        }
        out
    }

    /// Substitution with s = conj(t).
    pub fn eval(&self, pt: &ParamPoint) -> GScalar {
        self.eval_values(&pt.values12())
    }

    /// Substitution of arbitrary values for all twelve variables.
    pub fn eval_values(&self, values: &[GScalar]) -> GScalar {
        assert_eq!(values.len(), 12);
        let mut powers: Vec<Vec<GScalar>> = vec![vec![GScalar::one()]; 12];
        let mut acc = GScalar::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (k, &n) in e.iter().enumerate() {
                if n == 0 {
                    continue;
                }
                while powers[k].len() <= n as usize {
                    let next = powers[k].last().unwrap() * &values[k];
                    powers[k].push(next);
                }
                m *= &powers[k][n as usize];
            }
            acc += &m;
        }
        acc
    }

    /// Value and all twelve first partials at `pt`.
    pub fn eval_jet(&self, pt: &ParamPoint) -> Jet1 {
        let values = pt.values12();
        let partials = ParamVar::ALL
            .iter()
            .map(|&v| self.derivative(v).eval_values(&values))
            .collect();
        Jet1::from_parts(Some(pt.clone()), self.eval_values(&values), partials)
    }
}

impl From<GScalar> for MultiPoly {
    fn from(c: GScalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = [0u8; 12];
                for k in 0..12 {
                    e[k] = e1[k] + e2[k];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &n)| n > 0)
                .map(|(k, &n)| {
                    let name = ParamVar::from_index(k).name();
                    if n == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{n}")
                    }
                })
                .collect();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let p = MultiPoly::t(1, 1) * MultiPoly::s(1, 1);
        let pt = ParamPoint::zero().with(ParamVar::T11, GScalar::gauss(1, 2, 1, 3));
        assert_eq!(p.eval(&pt), GScalar::from_ratio(13, 36));
        assert_eq!(MultiPoly::one().eval(&pt), GScalar::one());
        let d = MultiPoly::t(1, 1) * MultiPoly::t(2, 2) - MultiPoly::t(1, 2) * MultiPoly::t(2, 1);
        let pt = ParamPoint::zero()
            .with(ParamVar::T11, GScalar::from_ratio(1, 2))
            .with(ParamVar::T22, GScalar::from_ratio(1, 2));
        assert_eq!(d.eval(&pt), GScalar::from_ratio(1, 4));
    }

    #[test]
    fn conj_swaps_variables() {
        let p = MultiPoly::t(1, 2).scale(&GScalar::i());
        assert_eq!(p.conj(), MultiPoly::s(1, 2).scale(&-GScalar::i()));
    }
}
