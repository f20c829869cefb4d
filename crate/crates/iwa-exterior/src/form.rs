use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use iwa_scalars::{Coeff, GScalar, Jet1, MultiPoly, ParamPoint, RatFunc, ScalarError};

use crate::mask::{self, Mask};

/// An invariant form: coefficients on the 64 coframe monomials.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Form<C> {
    terms: BTreeMap<Mask, C>,
}

impl<C: Coeff> Default for Form<C> {
    fn default() -> Self {
        Form::zero()
    }
}

/// d(e_m) as signed monomials; only γ and γ̄ have nonzero differential.
fn d_table() -> &'static Vec<Vec<(Mask, i32)>> {
    static TABLE: OnceLock<Vec<Vec<(Mask, i32)>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=mask::TOP)
            .map(|m| {
                let mut out: BTreeMap<Mask, i32> = BTreeMap::new();
                for k in mask::indices(m) {
                    // dγ = −α∧β, dγ̄ = −ᾱ∧β̄
                    let dk = match 1 << k {
                        mask::GAMMA => mask::ALPHA | mask::BETA,
                        mask::GAMMA_BAR => mask::ALPHA_BAR | mask::BETA_BAR,
                        _ => continue,
                    };
                    let before = m & ((1 << k) - 1);
                    let after = m & !((1 << (k + 1)) - 1);
                    // e_before ∧ dφ_k ∧ e_after with the Koszul sign of moving d past `before`
                    let koszul = if before.count_ones() % 2 == 0 { 1 } else { -1 };
                    let s1 = mask::wedge_sign(before, dk);
                    let s2 = mask::wedge_sign(before | dk, after);
                    let sign = -koszul * s1 * s2;
                    if sign != 0 {
                        *out.entry(before | dk | after).or_insert(0) += sign;
                    }
                }
                out.into_iter().filter(|(_, c)| *c != 0).collect()
            })
            .collect()
    })
}

impl<C: Coeff> Form<C> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Mask, c: C) -> Self {
        let mut f = Form::zero();
        f.add_term(m, c);
        f
    }

    pub fn scalar(c: C) -> Self {
        Form::monomial(0, c)
    }

    /// The k-th coframe covector (0..6 ↔ α, β, γ, ᾱ, β̄, γ̄).
    pub fn covector(k: usize) -> Self {
        Form::monomial(1 << k, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Mask, C)>>(terms: I) -> Self {
        let mut f = Form::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn add_term(&mut self, m: Mask, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &C)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mask) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if homogeneous (0 for the zero form), otherwise None.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|&m| mask::degree(m));
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn part_of_degree(&self, k: usize) -> Self {
        self.filter(|m| mask::degree(m) == k)
    }

    /// The J₀-bidegree (p,q) component.
    pub fn part_j0(&self, p: usize, q: usize) -> Self {
        self.filter(|m| mask::bidegree(m) == (p, q))
    }

    pub fn filter(&self, keep: impl Fn(Mask) -> bool) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Form::zero();
        }
        Form::from_terms(self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())))
    }

    pub fn scale_scalar(&self, c: &GScalar) -> Self {
        Form::from_terms(self.terms.iter().map(|(m, a)| (*m, a.scale(c))))
    }

    pub fn wedge(&self, other: &Form<C>) -> Self {
        let mut out = Form::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let s = mask::wedge_sign(*a, *b);
                if s == 0 {
                    continue;
                }
                let c = x.clone() * y.clone();
                out.add_term(a | b, if s > 0 { c } else { -c });
            }
        }
        out
    }

    /// Wedge of a list of forms, left to right.
    pub fn wedge_all(forms: &[Form<C>]) -> Self {
        forms
            .iter()
            .fold(Form::scalar(C::one()), |acc, f| acc.wedge(f))
    }

    /// The exterior differential on the fixed coframe.
    pub fn d(&self) -> Self {
        let table = d_table();
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            for &(n, s) in &table[*m as usize] {
                out.add_term(n, c.scale(&GScalar::from_int(s as i64)));
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            let (n, s) = mask::conj_mask(*m);
            let c = c.conj();
            out.add_term(n, if s > 0 { c } else { -c });
        }
        out
    }

    /// Interior product with the k-th vector dual to the coframe.
    pub fn contract(&self, k: usize) -> Self {
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            if let Some((n, s)) = mask::contract_mask(k, *m) {
                out.add_term(n, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        out
    }

    /// Interior product with Σ v_k ξ_k.
    pub fn contract_vec(&self, v: &[C]) -> Self {
        assert_eq!(v.len(), 6);
        let mut out = Form::zero();
        for (k, vk) in v.iter().enumerate() {
            if !vk.is_zero() {
                out = out + self.contract(k).scale(vk);
            }
        }
        out
    }

    pub fn top_coeff(&self) -> C {
        self.coeff(mask::TOP)
    }

    /// ∫_X u with ∫ iα∧ᾱ∧iβ∧β̄∧iγ∧γ̄ = 1, i.e. (top coefficient)·(−i).
    pub fn integrate(&self) -> C {
        -(self.top_coeff() * C::i())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Form<D> {
        Form::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Form<D>, E> {
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Coefficient vector on the given monomial list.
    pub fn to_vec(&self, basis: &[Mask]) -> Vec<C> {
        basis.iter().map(|&m| self.coeff(m)).collect()
    }

    pub fn from_vec(basis: &[Mask], v: &[C]) -> Self {
        assert_eq!(basis.len(), v.len());
        Form::from_terms(basis.iter().copied().zip(v.iter().cloned()))
    }
}

impl Form<GScalar> {
    pub fn from_scalar_terms(terms: &[(Mask, GScalar)]) -> Self {
        Form::from_terms(terms.iter().cloned())
    }

    pub fn to_poly(&self) -> Form<MultiPoly> {
        self.map(|c| MultiPoly::constant(c.clone()))
    }
}

impl Form<MultiPoly> {
    pub fn eval(&self, pt: &ParamPoint) -> Form<GScalar> {
        self.map(|c| c.eval(pt))
    }

    pub fn eval_jet(&self, pt: &ParamPoint) -> Form<Jet1> {
        self.map(|c| c.eval_jet(pt))
    }
}

impl Form<RatFunc> {
    pub fn eval(&self, pt: &ParamPoint) -> Result<Form<GScalar>, ScalarError> {
        self.try_map(|c| c.eval(pt))
    }
}

impl Form<Jet1> {
    pub fn value(&self) -> Form<GScalar> {
        self.map(|j| j.value().clone())
    }

    /// The form of partial derivatives in direction `v`.
    pub fn partial(&self, v: iwa_scalars::ParamVar) -> Form<GScalar> {
        self.map(|j| j.partial(v).clone())
    }
}

impl<'a, C: Coeff> Add<&'a Form<C>> for &'a Form<C> {
    type Output = Form<C>;
    fn add(self, rhs: &'a Form<C>) -> Form<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Form<C>> for &'a Form<C> {
    type Output = Form<C>;
    fn sub(self, rhs: &'a Form<C>) -> Form<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for Form<C> {
    type Output = Form<C>;
    fn add(self, rhs: Form<C>) -> Form<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Form<C> {
    type Output = Form<C>;
    fn sub(self, rhs: Form<C>) -> Form<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Neg for Form<C> {
    type Output = Form<C>;
    fn neg(self) -> Form<C> {
        Form {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Form<C> {
    type Output = Form<C>;
    fn neg(self) -> Form<C> {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::*;

    type F = Form<GScalar>;

    #[test]
    fn structure_equations() {
        assert_eq!(F::covector(2).d(), F::monomial(ALPHA | BETA, GScalar::from_int(-1)));
        assert_eq!(F::covector(5).d(), F::monomial(ALPHA_BAR | BETA_BAR, GScalar::from_int(-1)));
        for k in [0, 1, 3, 4] {
            assert!(F::covector(k).d().is_zero());
        }
    }

    #[test]
    fn d_gamma_gammabar() {
        // d(γ∧γ̄) = −α∧β∧γ̄ + γ∧ᾱ∧β̄
        let g = F::covector(2).wedge(&F::covector(5));
        let expected = F::monomial(ALPHA | BETA | GAMMA_BAR, GScalar::from_int(-1))
            + F::covector(2).wedge(&F::covector(3)).wedge(&F::covector(4));
        assert_eq!(g.d(), expected);
    }
}
