use iwa_cohomology::linalg::{self, Vector};
use iwa_cohomology::{BigradedComplex, CohomologySpace};
use iwa_exterior::mask::{ALPHA, ALPHA_BAR, BETA, BETA_BAR, GAMMA, GAMMA_BAR};
use iwa_exterior::Form;
use iwa_scalars::{GScalar, Matrix};

use crate::pairing::q_form;
use crate::MirrorError;

fn mono(m: u8, c: GScalar) -> Form<GScalar> {
    Form::monomial(m, c)
}

fn wedge3(a: u8, b: u8, c: u8) -> Form<GScalar> {
    Form::wedge_all(&[mono(a, GScalar::one()), mono(b, GScalar::one()), mono(c, GScalar::one())])
}

fn i_aa() -> Form<GScalar> {
    mono(ALPHA | ALPHA_BAR, GScalar::i())
}

fn i_bb() -> Form<GScalar> {
    mono(BETA | BETA_BAR, GScalar::i())
}

fn g_plus_gb() -> Form<GScalar> {
    mono(GAMMA, GScalar::one()) + mono(GAMMA_BAR, GScalar::one())
}

/// η₀..η₄:
/// η₀ = αβγ + i(αᾱ+ββ̄)∧(γ+γ̄) + ᾱβ̄γ̄, η₁ = αβγ + ᾱβ̄γ̄,
/// η₂ = i(αᾱ−ββ̄)∧(γ+γ̄), η₃ = αβ̄γ + ᾱβγ̄, η₄ = ᾱβγ + αβ̄γ̄.
pub fn default_etas() -> [Form<GScalar>; 5] {
    let top = wedge3(ALPHA, BETA, GAMMA) + wedge3(ALPHA_BAR, BETA_BAR, GAMMA_BAR);
    [
        top.clone() + (i_aa() + i_bb()).wedge(&g_plus_gb()),
        top,
        (i_aa() - i_bb()).wedge(&g_plus_gb()),
        wedge3(ALPHA, BETA_BAR, GAMMA) + wedge3(ALPHA_BAR, BETA, GAMMA_BAR),
        wedge3(ALPHA_BAR, BETA, GAMMA) + wedge3(ALPHA, BETA_BAR, GAMMA_BAR),
    ]
}

/// η₀^{2,1} = i(αᾱ+ββ̄)∧γ.
pub fn eta0_21() -> Form<GScalar> {
    (i_aa() + i_bb()).wedge(&mono(GAMMA, GScalar::one()))
}

/// A real basis b₁..b₁₀ of H³(X,ℝ), with the class map of H³_DR.
pub struct RealH3 {
    space: CohomologySpace,
    basis: Vec<Form<GScalar>>,
    coords: Vec<Vector>,
    gram: Matrix<GScalar>,
}

impl RealH3 {
    /// Real and imaginary parts of the de Rham representatives, kept greedily
    /// while independent.
    pub fn new() -> Self {
        let space = BigradedComplex::standard().de_rham(3);
        let mut basis = Vec::new();
        let mut coords: Vec<Vector> = Vec::new();
        let half = GScalar::from_ratio(1, 2);
        let half_i = GScalar::gauss(0, 1, -1, 2);
        for r in space.representatives() {
            let rb = r.conj();
            for cand in [(r.clone() + rb.clone()).scale(&half), (r.clone() - rb.clone()).scale(&half_i)] {
                let c = space.class_coords(&cand).expect("closed");
                let mut trial = coords.clone();
                trial.push(c.clone());
                if linalg::rank(&trial) == trial.len() {
                    coords.push(c);
                    basis.push(cand);
                }
            }
        }
        assert_eq!(basis.len(), space.dimension());
        let n = basis.len();
        let gram = Matrix::from_rows(
            (0..n).map(|a| (0..n).map(|b| q_form(&basis[a], &basis[b])).collect()).collect(),
        );
        RealH3 { space, basis, coords, gram }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Form<GScalar>] {
        &self.basis
    }

    /// Q on the real basis; a rational antisymmetric matrix.
    pub fn gram(&self) -> &Matrix<GScalar> {
        &self.gram
    }

    /// Real coordinates of the class of a closed 3-form.
    pub fn real_coords(&self, u: &Form<GScalar>) -> Result<Vector, MirrorError> {
        let c = self.space.class_coords(u)?;
        let x = linalg::express(&self.coords, &c).expect("basis spans H³");
        if x.iter().all(GScalar::is_real) {
            Ok(x)
        } else {
            Err(MirrorError::NotReal("class has non-real coordinates".into()))
        }
    }

    pub fn form_of(&self, x: &[GScalar]) -> Form<GScalar> {
        self.basis
            .iter()
            .zip(x)
            .fold(Form::zero(), |acc, (b, c)| acc + b.scale(c))
    }

    fn q(&self, x: &[GScalar], y: &[GScalar]) -> GScalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).fold(GScalar::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl Default for RealH3 {
    fn default() -> Self {
        RealH3::new()
    }
}

/// Real classes with Q(η_j,η_k) = Q(ν_j,ν_k) = 0 and Q(η_j,ν_k) = δ_jk.
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    pub eta: Vec<Form<GScalar>>,
    pub nu: Vec<Form<GScalar>>,
}

impl SymplecticBasis {
    /// The completion of the default η₀..η₄.
    pub fn standard() -> Self {
        complete_lagrangian(&default_etas()).expect("the default η's are Lagrangian")
    }

    /// Q on (η₀..η_{n−1}, ν₀..ν_{n−1}).
    pub fn gram(&self) -> Matrix<GScalar> {
        let all: Vec<&Form<GScalar>> = self.eta.iter().chain(&self.nu).collect();
        Matrix::from_rows(
            all.iter()
                .map(|u| all.iter().map(|v| q_form(*u, *v)).collect())
                .collect(),
        )
    }

    pub fn is_standard(&self) -> bool {
        let n = self.eta.len();
        let g = self.gram();
        (0..2 * n).all(|a| {
            (0..2 * n).all(|b| {
                let want = if a < n && b == a + n {
                    GScalar::one()
                } else if a >= n && b + n == a {
                    GScalar::from_int(-1)
                } else {
                    GScalar::zero()
                };
                g[(a, b)] == want
            })
        })
    }
}

/// ν'_k solving Q(η_j, ν'_k) = δ_jk, corrected by −½ Σ Q(ν'_k,ν'_l) η_l so
/// that the ν's are mutually isotropic.
pub fn complete_lagrangian(etas: &[Form<GScalar>]) -> Result<SymplecticBasis, MirrorError> {
    let h = RealH3::new();
    let n = etas.len();
    let x: Vec<Vector> = etas.iter().map(|e| h.real_coords(e)).collect::<Result<_, _>>()?;
    if linalg::rank(&x) < n {
        return Err(MirrorError::IsotropyError("the η's are linearly dependent".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if !h.q(&x[a], &x[b]).is_zero() {
                return Err(MirrorError::IsotropyError(format!("Q(η{a},η{b}) ≠ 0")));
            }
        }
    }
    let rows: Vec<Vector> = x.iter().map(|e| h.gram.transpose().mul_vec(e)).collect();
    let sys = Matrix::from_rows(rows);
    let mut nus: Vec<Vector> = (0..n)
        .map(|k| {
            let rhs: Vector = (0..n).map(|j| GScalar::from_int((j == k) as i64)).collect();
            sys.solve(&rhs).expect("Q is non-degenerate")
        })
        .collect();
    let a: Vec<Vec<GScalar>> = (0..n).map(|k| (0..n).map(|l| h.q(&nus[k], &nus[l])).collect()).collect();
    let half = GScalar::from_ratio(-1, 2);
    for k in 0..n {
        for l in 0..n {
            let c = &a[k][l] * &half;
            for (v, e) in nus[k].iter_mut().zip(&x[l]) {
                *v += &(&c * e);
            }
        }
    }
    Ok(SymplecticBasis {
        eta: etas.to_vec(),
        nu: nus.iter().map(|v| h.form_of(v)).collect(),
    })
}

/// Symplectic Gram–Schmidt over ℚ starting from η₀, pulling further vectors
/// from the real basis in order.
pub fn symplectic_complete(eta0: &Form<GScalar>) -> Result<SymplecticBasis, MirrorError> {
    let h = RealH3::new();
    let e0 = h.real_coords(eta0)?;
    if e0.iter().all(GScalar::is_zero) {
        return Err(MirrorError::IsotropyError("η₀ is the zero class".into()));
    }
    let n = h.dimension();
    let unit = |i: usize| -> Vector { (0..n).map(|j| GScalar::from_int((i == j) as i64)).collect() };
    let mut pool: Vec<Vector> = (0..n).map(unit).collect();
    let mut eta: Vec<Vector> = Vec::new();
    let mut nu: Vec<Vector> = Vec::new();
    let mut next = Some(e0);
    loop {
        let e = match next.take().or_else(|| pool.iter().find(|v| v.iter().any(|c| !c.is_zero())).cloned()) {
            Some(e) => e,
            None => break,
        };
        let partner = pool
            .iter()
            .find(|v| !h.q(&e, v).is_zero())
            .cloned()
            .ok_or_else(|| MirrorError::IsotropyError("Q(η,·) vanishes on the complement".into()))?;
        let s = h.q(&e, &partner).inv().expect("nonzero");
        let f: Vector = partner.iter().map(|c| c * &s).collect();
        // x ↦ x − Q(x,f) e + Q(x,e) f
        pool = pool
            .iter()
            .map(|x| {
                let (a, b) = (h.q(x, &f), h.q(x, &e));
                (0..n).map(|i| &x[i] - &(&a * &e[i]) + &b * &f[i]).collect()
            })
            .collect();
        eta.push(e);
        nu.push(f);
    }
    Ok(SymplecticBasis {
        eta: eta.iter().map(|v| h.form_of(v)).collect(),
        nu: nu.iter().map(|v| h.form_of(v)).collect(),
    })
}
