use std::fmt;

use iwa_exterior::mask::{self, GAMMA, GAMMA_BAR};
use iwa_exterior::Form;
use iwa_scalars::{Coeff, GScalar, Matrix};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::MirrorError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingKind {
    /// Q(u,v) = −∫u∧v on 3-forms.
    Q,
    /// H(u,v) = −i∫u∧v̄ on 3-forms.
    H,
    /// Q_B(u,v) = −∫_B u∧v on the torus model.
    QB,
    /// H_B(u,v) = ∫_B u∧v̄ on the torus model.
    HB,
}

impl PairingKind {
    pub fn is_hermitian(self) -> bool {
        matches!(self, PairingKind::H | PairingKind::HB)
    }

    fn on_torus(self) -> bool {
        matches!(self, PairingKind::QB | PairingKind::HB)
    }
}

/// ∫_B x = ∫_X x ∧ iγ∧γ̄, so that ∫_B iα∧ᾱ∧iβ∧β̄ = 1.
pub fn integrate_torus<C: Coeff>(x: &Form<C>) -> C {
    let fibre = Form::monomial(GAMMA | GAMMA_BAR, C::i());
    x.wedge(&fibre).integrate()
}

/// Q(u,v) = −∫u∧v for any coefficient ring.
pub fn q_form<C: Coeff>(u: &Form<C>, v: &Form<C>) -> C {
    -u.wedge(v).integrate()
}

/// Q_B(u,v) = −∫_B u∧v.
pub fn qb_form<C: Coeff>(u: &Form<C>, v: &Form<C>) -> C {
    -integrate_torus(&u.wedge(v))
}

fn check(kind: PairingKind, u: &Form<GScalar>) -> Result<(), MirrorError> {
    if u.is_zero() {
        return Ok(());
    }
    let want = if kind.on_torus() { 2 } else { 3 };
    if u.degree() != Some(want) {
        return Err(MirrorError::DegreeMismatch(format!("{kind:?} needs a homogeneous {want}-form")));
    }
    if kind.on_torus() && u.terms().any(|(m, _)| m & (GAMMA | GAMMA_BAR) != 0) {
        return Err(MirrorError::DegreeMismatch(format!("{kind:?} needs a form on the torus model")));
    }
    Ok(())
}

pub fn pairing(kind: PairingKind, u: &Form<GScalar>, v: &Form<GScalar>) -> Result<GScalar, MirrorError> {
    check(kind, u)?;
    check(kind, v)?;
    Ok(match kind {
        PairingKind::Q => q_form(u, v),
        PairingKind::H => -(GScalar::i() * u.wedge(&v.conj()).integrate()),
        PairingKind::QB => qb_form(u, v),
        PairingKind::HB => integrate_torus(&u.wedge(&v.conj())),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Zero => "0",
            Sign::Plus => "+",
        })
    }
}

/// `(-,+,+,+)`.
pub fn render_signs(signs: &[Sign]) -> String {
    let parts: Vec<String> = signs.iter().map(Sign::to_string).collect();
    format!("({})", parts.join(","))
}

/// Gram matrix G_ab = P(b_a, b_b) of a pairing on a labelled basis.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub kind: PairingKind,
    pub labels: Vec<String>,
    pub entries: Matrix<GScalar>,
}

impl PairingMatrix {
    pub fn new(kind: PairingKind, basis: &[(String, Form<GScalar>)]) -> Result<Self, MirrorError> {
        let n = basis.len();
        let mut rows = Vec::with_capacity(n);
        for (_, u) in basis {
            let mut row = Vec::with_capacity(n);
            for (_, v) in basis {
                row.push(pairing(kind, u, v)?);
            }
            rows.push(row);
        }
        Ok(PairingMatrix {
            kind,
            labels: basis.iter().map(|(l, _)| l.clone()).collect(),
            entries: if n == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) },
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let g = &self.entries;
        (0..self.dim()).all(|a| (0..self.dim()).all(|b| g[(a, b)] == -&g[(b, a)]))
    }

    pub fn is_symmetric(&self) -> bool {
        let g = &self.entries;
        (0..self.dim()).all(|a| (0..self.dim()).all(|b| g[(a, b)] == g[(b, a)]))
    }

    pub fn is_hermitian(&self) -> bool {
        let g = &self.entries;
        (0..self.dim()).all(|a| (0..self.dim()).all(|b| g[(a, b)] == g[(b, a)].conj()))
    }

    /// Pivot signs of a Hermitian congruence diagonalization, in basis order
    /// (so a diagonal Gram matrix yields the signs of its diagonal).
    /// `None` unless the matrix is Hermitian.
    pub fn signature(&self) -> Option<Vec<Sign>> {
        self.is_hermitian().then(|| hermitian_pivot_signs(&self.entries))
    }

    /// (n_minus, n_plus, n_zero).
    pub fn inertia(&self) -> Option<(usize, usize, usize)> {
        self.signature().map(|s| {
            let count = |x: Sign| s.iter().filter(|&&y| y == x).count();
            (count(Sign::Minus), count(Sign::Plus), count(Sign::Zero))
        })
    }
}

/// Symmetric Gaussian elimination G ↦ P G P* over ℚ(i).
pub fn hermitian_pivot_signs(g: &Matrix<GScalar>) -> Vec<Sign> {
    let n = g.rows();
    let mut a = g.clone();
    let mut out = Vec::with_capacity(n);
    // row k += c·row j, column k += c̄·column j
    let add = |a: &mut Matrix<GScalar>, k: usize, j: usize, c: &GScalar| {
        for col in 0..n {
            let v = &a[(j, col)] * c;
            a[(k, col)] += &v;
        }
        let cb = c.conj();
        for row in 0..n {
            let v = &a[(row, j)] * &cb;
            a[(row, k)] += &v;
        }
    };
    let shifts = [
        GScalar::one(),
        GScalar::i(),
        GScalar::from_int(-1),
        -GScalar::i(),
        GScalar::from_int(2),
        GScalar::gauss(0, 1, 2, 1),
    ];
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero() || !a[(j, j)].is_zero()) {
                for c in &shifts {
                    let saved = a.clone();
                    add(&mut a, k, j, c);
                    if !a[(k, k)].is_zero() {
                        break;
                    }
                    a = saved;
                }
            }
        }
        let p = a[(k, k)].clone();
        if p.is_zero() {
            out.push(Sign::Zero);
            continue;
        }
        let pinv = p.inv().expect("nonzero pivot");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] * &pinv);
            add(&mut a, i, k, &f);
        }
        out.push(if p.re().is_positive() { Sign::Plus } else { Sign::Minus });
    }
    out
}

/// A monomial with a small coefficient, for building labelled bases.
pub fn labelled(label: &str, u: Form<GScalar>) -> (String, Form<GScalar>) {
    (label.to_string(), u)
}

/// The fixed-coframe monomial for a list of covector indices, with the sign
/// of the given order.
pub fn ordered(idx: &[usize]) -> Form<GScalar> {
    let sign = mask::sequence_sign(idx) as i64;
    Form::monomial(mask::from_indices(idx), GScalar::from_int(sign))
}
