use iwa_exterior::{Form, Frame};
use iwa_scalars::{GScalar, Matrix};

/// A T^{1,0}-valued (0,1) element Σ c_kj ξ_k ⊗ φ̄_j with k ∈ {α,β,γ} and
/// j ∈ {ᾱ,β̄,γ̄} of some frame.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentElement {
    pub coeffs: [[GScalar; 3]; 3],
}

impl TangentElement {
    pub fn zero() -> Self {
        TangentElement {
            coeffs: std::array::from_fn(|_| std::array::from_fn(|_| GScalar::zero())),
        }
    }

    /// ξ_k ⊗ φ̄_j.
    pub fn basis(k: usize, j: usize) -> Self {
        let mut t = TangentElement::zero();
        t.coeffs[k][j] = GScalar::one();
        t
    }

    /// The six elements ξ_k ⊗ ᾱ, ξ_k ⊗ β̄ in the order (α,ᾱ), (α,β̄), (β,ᾱ),
    /// (β,β̄), (γ,ᾱ), (γ,β̄).
    pub fn h01_basis() -> Vec<TangentElement> {
        (0..3)
            .flat_map(|k| (0..2).map(move |j| TangentElement::basis(k, j)))
            .collect()
    }

    pub fn add(&self, other: &TangentElement) -> Self {
        TangentElement {
            coeffs: std::array::from_fn(|k| {
                std::array::from_fn(|j| &self.coeffs[k][j] + &other.coeffs[k][j])
            }),
        }
    }

    pub fn scale(&self, c: &GScalar) -> Self {
        TangentElement {
            coeffs: std::array::from_fn(|k| std::array::from_fn(|j| &self.coeffs[k][j] * c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(GScalar::is_zero)
    }

    /// θ⌟u = Σ c_kj (ξ_k ⌟ u) ∧ φ̄_j.
    pub fn contract(&self, frame: &Frame<GScalar>, u: &Form<GScalar>) -> Form<GScalar> {
        let mut out = Form::zero();
        for k in 0..3 {
            let inner = frame.contract(k, u);
            if inner.is_zero() {
                continue;
            }
            for j in 0..3 {
                let c = &self.coeffs[k][j];
                if !c.is_zero() {
                    out = out + inner.wedge(&frame.covector(j + 3)).scale(c);
                }
            }
        }
        out
    }

    /// The (0,1) part: Σ_j c_kj φ̄_j for a fixed k.
    pub fn form_part(&self, frame: &Frame<GScalar>, k: usize) -> Form<GScalar> {
        (0..3).fold(Form::zero(), |acc, j| {
            acc + frame.covector(j + 3).scale(&self.coeffs[k][j])
        })
    }
}

/// [θ] ↦ [θ⌟Ω].
pub fn cy_isomorphism(theta: &TangentElement, frame: &Frame<GScalar>, omega: &Form<GScalar>) -> Form<GScalar> {
    theta.contract(frame, omega)
}

/// θ⌟γ_t for the frame's third covector.
pub fn contract_with_gamma(theta: &TangentElement, frame: &Frame<GScalar>) -> Form<GScalar> {
    theta.contract(frame, &frame.covector(2))
}

/// Kernel of θ ↦ θ⌟γ on the six-dimensional H^{0,1}(T^{1,0}) at t = 0,
/// as coefficient vectors in [`TangentElement::h01_basis`] order. At t = 0
/// there are no ∂̄-exact (0,1)-forms, so the class vanishes iff the form does.
pub fn gamma_contraction_kernel() -> Vec<Vec<GScalar>> {
    let frame = Frame::identity();
    let basis = TangentElement::h01_basis();
    let images: Vec<Vec<GScalar>> = basis
        .iter()
        .map(|th| contract_with_gamma(th, &frame).to_vec(&[1 << 3, 1 << 4]))
        .collect();
    Matrix::from_cols(2, &images).nullspace()
}
