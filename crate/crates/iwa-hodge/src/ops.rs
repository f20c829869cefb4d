use iwa_cohomology::linalg::{self, Vector};
use iwa_exterior::mask::{self, Mask};
use iwa_exterior::Form;
use iwa_scalars::{GScalar, Matrix};
use serde::{Deserialize, Serialize};

use crate::Metric;

/// First-order operators acting on invariant forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    D,
    Del,
    DelBar,
    /// ∂∂̄
    DelDelBar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LaplacianKind {
    /// Δ'' = ∂̄∂̄* + ∂̄*∂̄
    DelBar,
    /// Δ' = ∂∂* + ∂*∂
    Del,
    /// Δ = dd* + d*d
    DeRham,
    /// The fourth-order Aeppli Laplacian.
    Aeppli,
    /// The fourth-order Bott–Chern Laplacian.
    BottChern,
}

/// Monomials a computation is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    Bidegree(usize, usize),
    Degree(usize),
}

impl Support {
    pub fn masks(self) -> Vec<Mask> {
        match self {
            Support::Bidegree(p, q) if p <= 3 && q <= 3 => mask::of_bidegree(p, q),
            Support::Degree(k) if k <= 6 => mask::of_degree(k),
            _ => Vec::new(),
        }
    }
}

/// 64×64 operator matrices in ψ-monomial coordinates (index = mask).
pub(crate) struct Operators {
    weights: Vec<GScalar>,
    del: Matrix<GScalar>,
    delbar: Matrix<GScalar>,
    d: Matrix<GScalar>,
    ddbar: Matrix<GScalar>,
    del_adj: Matrix<GScalar>,
    delbar_adj: Matrix<GScalar>,
    d_adj: Matrix<GScalar>,
    ddbar_adj: Matrix<GScalar>,
}

fn all_masks() -> Vec<Mask> {
    (0..64).collect()
}

impl Operators {
    pub(crate) fn build(m: &Metric) -> Self {
        let psi = m.psi();
        let all = all_masks();
        let matrix = |f: &dyn Fn(&Form<GScalar>) -> Form<GScalar>| {
            let cols: Vec<Vector> = all
                .iter()
                .map(|&s| f(&Form::monomial(s, GScalar::one())).to_vec(&all))
                .collect();
            Matrix::from_cols(64, &cols)
        };
        let del = matrix(&|u| psi.del_frame(u));
        let delbar = matrix(&|u| psi.delbar_frame(u));
        let d = &del + &delbar;
        let ddbar = &del * &delbar;
        let weights: Vec<GScalar> = all.iter().map(|&s| GScalar::from_rational(m.weight(s))).collect();
        let adj = |a: &Matrix<GScalar>| {
            // (A*)_{ST} = conj(A_{TS}) w_T / w_S
            let mut out = Matrix::zeros(64, 64);
            for s in 0..64 {
                for t in 0..64 {
                    let x = &a[(t, s)];
                    if !x.is_zero() {
                        out[(s, t)] = x.conj() * weights[t].clone() * weights[s].inv().expect("positive weight");
                    }
                }
            }
            out
        };
        Operators {
            del_adj: adj(&del),
            delbar_adj: adj(&delbar),
            d_adj: adj(&d),
            ddbar_adj: adj(&ddbar),
            weights,
            del,
            delbar,
            d,
            ddbar,
        }
    }

    fn op(&self, op: Op) -> &Matrix<GScalar> {
        match op {
            Op::D => &self.d,
            Op::Del => &self.del,
            Op::DelBar => &self.delbar,
            Op::DelDelBar => &self.ddbar,
        }
    }

    fn adj(&self, op: Op) -> &Matrix<GScalar> {
        match op {
            Op::D => &self.d_adj,
            Op::Del => &self.del_adj,
            Op::DelBar => &self.delbar_adj,
            Op::DelDelBar => &self.ddbar_adj,
        }
    }

    fn laplacian(&self, kind: LaplacianKind) -> Matrix<GScalar> {
        let sym = |a: &Matrix<GScalar>, b: &Matrix<GScalar>| &(a * b) + &(b * a);
        match kind {
            LaplacianKind::DelBar => sym(&self.delbar, &self.delbar_adj),
            LaplacianKind::Del => sym(&self.del, &self.del_adj),
            LaplacianKind::DeRham => sym(&self.d, &self.d_adj),
            LaplacianKind::Aeppli => {
                let (del, delb, dels, delbs) = (&self.del, &self.delbar, &self.del_adj, &self.delbar_adj);
                let (ddb, ddbs) = (&self.ddbar, &self.ddbar_adj);
                // ∂∂* + ∂̄∂̄* + (∂∂̄)*(∂∂̄) + (∂∂̄)(∂∂̄)* + (∂̄∂*)*(∂̄∂*) + (∂∂̄*)*(∂∂̄*)
                let a = delb * dels;
                let b = del * delbs;
                let terms = [del * dels, delb * delbs, ddbs * ddb, ddb * ddbs, &b * &a, &a * &b];
                sum(terms)
            }
            LaplacianKind::BottChern => {
                let (del, delb, dels, delbs) = (&self.del, &self.delbar, &self.del_adj, &self.delbar_adj);
                let (ddb, ddbs) = (&self.ddbar, &self.ddbar_adj);
                // ∂*∂ + ∂̄*∂̄ + (∂∂̄)*(∂∂̄) + (∂∂̄)(∂∂̄)* + (∂*∂̄)*(∂*∂̄) + (∂̄*∂)*(∂̄*∂)
                let a = dels * delb;
                let b = delbs * del;
                let terms = [dels * del, delbs * delb, ddbs * ddb, ddb * ddbs, &b * &a, &a * &b];
                sum(terms)
            }
        }
    }
}

fn sum<const N: usize>(terms: [Matrix<GScalar>; N]) -> Matrix<GScalar> {
    terms.into_iter().reduce(|a, b| &a + &b).expect("nonempty")
}

fn sub(m: &Matrix<GScalar>, rows: &[Mask], cols: &[Mask]) -> Matrix<GScalar> {
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            out[(i, j)] = m[(r as usize, c as usize)].clone();
        }
    }
    out
}

impl Metric {
    pub(crate) fn to_psi(&self, u: &Form<GScalar>) -> Vector {
        self.psi().to_frame(u).to_vec(&all_masks())
    }

    pub(crate) fn from_psi(&self, v: &[GScalar]) -> Form<GScalar> {
        self.psi().from_frame(&Form::from_vec(&all_masks(), v))
    }

    /// Pointwise Hermitian product ⟨u, v⟩ (equal to the L² product since
    /// everything is invariant and the volume is normalised to 1).
    pub fn inner(&self, u: &Form<GScalar>, v: &Form<GScalar>) -> GScalar {
        let (a, b) = (self.to_psi(u), self.to_psi(v));
        let w = &self.operators().weights;
        (0..64).fold(GScalar::zero(), |acc, s| acc + a[s].clone() * b[s].conj() * w[s].clone())
    }

    pub fn norm_sqr(&self, u: &Form<GScalar>) -> GScalar {
        self.inner(u, u)
    }

    /// dV = ω³/3!.
    pub fn volume_form(&self) -> Form<GScalar> {
        let w = self.omega();
        w.wedge(&w).wedge(&w).scale(&GScalar::from_ratio(1, 6))
    }

    /// The ℂ-linear Hodge star, u ∧ ⋆v̄ = ⟨u, v⟩ dV.
    pub fn star(&self, u: &Form<GScalar>) -> Form<GScalar> {
        let vol = self.psi().to_frame(&self.volume_form()).coeff(mask::TOP);
        let v = self.psi().to_frame(u);
        let mut out = Form::zero();
        for (s, c) in v.terms() {
            let comp = mask::TOP & !s;
            let sign = GScalar::from_int(mask::wedge_sign(s, comp) as i64);
            let k = GScalar::from_rational(self.weight(s)) * vol.clone() * sign;
            out = out + Form::monomial(comp, k).conj().scale(c);
        }
        self.psi().from_frame(&out)
    }

    pub fn apply(&self, op: Op, u: &Form<GScalar>) -> Form<GScalar> {
        self.from_psi(&self.operators().op(op).mul_vec(&self.to_psi(u)))
    }

    /// The formal adjoint of `op` with respect to this metric.
    pub fn adjoint(&self, op: Op, u: &Form<GScalar>) -> Form<GScalar> {
        self.from_psi(&self.operators().adj(op).mul_vec(&self.to_psi(u)))
    }

    /// The Laplacian applied to u, assembled from the operators.
    pub fn laplacian(&self, kind: LaplacianKind, u: &Form<GScalar>) -> Form<GScalar> {
        self.from_psi(&self.operators().laplacian(kind).mul_vec(&self.to_psi(u)))
    }

    /// Harmonic forms as an intersection of first-order kernels:
    /// Δ'' ↔ ker ∂̄ ∩ ker ∂̄*, Δ' ↔ ker ∂ ∩ ker ∂*, Δ ↔ ker d ∩ ker d*,
    /// Δ_A ↔ ker ∂∂̄ ∩ ker ∂* ∩ ker ∂̄*, Δ_BC ↔ ker ∂ ∩ ker ∂̄ ∩ ker (∂∂̄)*.
    pub fn harmonic(&self, kind: LaplacianKind, support: Support) -> Vec<Form<GScalar>> {
        let o = self.operators();
        let mats: Vec<&Matrix<GScalar>> = match kind {
            LaplacianKind::DelBar => vec![&o.delbar, &o.delbar_adj],
            LaplacianKind::Del => vec![&o.del, &o.del_adj],
            LaplacianKind::DeRham => vec![&o.d, &o.d_adj],
            LaplacianKind::Aeppli => vec![&o.ddbar, &o.del_adj, &o.delbar_adj],
            LaplacianKind::BottChern => vec![&o.del, &o.delbar, &o.ddbar_adj],
        };
        let cols = support.masks();
        let all = all_masks();
        let stacked = mats
            .iter()
            .map(|m| sub(m, &all, &cols))
            .reduce(|a, b| a.vstack(&b))
            .expect("nonempty");
        self.kernel_forms(&stacked, &cols)
    }

    /// Kernel of the assembled Laplacian on the support.
    pub fn laplacian_kernel(&self, kind: LaplacianKind, support: Support) -> Vec<Form<GScalar>> {
        let cols = support.masks();
        let lap = sub(&self.operators().laplacian(kind), &all_masks(), &cols);
        self.kernel_forms(&lap, &cols)
    }

    fn kernel_forms(&self, m: &Matrix<GScalar>, cols: &[Mask]) -> Vec<Form<GScalar>> {
        linalg::kernel(m)
            .into_iter()
            .map(|v| self.psi().from_frame(&Form::from_vec(cols, &v)))
            .collect()
    }

    /// Orthogonal projection coefficients: Gram system for `basis`.
    pub(crate) fn project_out(&self, x: &Form<GScalar>, basis: &[Form<GScalar>]) -> Form<GScalar> {
        if basis.is_empty() {
            return x.clone();
        }
        let g = Matrix::from_rows(
            basis
                .iter()
                .map(|a| basis.iter().map(|b| self.inner(b, a)).collect())
                .collect(),
        );
        let rhs: Vector = basis.iter().map(|a| self.inner(x, a)).collect();
        let c = g.solve(&rhs).expect("Gram matrix of a basis is invertible");
        basis
            .iter()
            .zip(c)
            .fold(x.clone(), |acc, (b, ci)| acc - b.scale(&ci))
    }
}
