use std::sync::OnceLock;

use iwa_cohomology::linalg::{self, Vector};
use iwa_cohomology::BigradedComplex;
use iwa_exterior::mask::{self, Mask};
use iwa_exterior::Form;
use iwa_hodge::{LaplacianKind, Metric, Support};
use iwa_scalars::{Coeff, GScalar, Matrix};

use crate::MirrorError;

/// Harmonic 3-forms split into the ±i eigenspaces of ⋆.
#[derive(Clone, Debug)]
pub struct StarSplit {
    pub plus: Vec<Form<GScalar>>,
    pub minus: Vec<Form<GScalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eigen {
    /// ⋆ = +i
    Plus,
    /// ⋆ = −i
    Minus,
}

fn vec3(u: &Form<GScalar>) -> Vector {
    u.to_vec(&mask::of_degree(3))
}

fn form3(v: &[GScalar]) -> Form<GScalar> {
    Form::from_vec(&mask::of_degree(3), v)
}

pub fn star_split(m: &Metric) -> StarSplit {
    let harm = m.harmonic(LaplacianKind::DeRham, Support::Degree(3));
    let hv: Vec<Vector> = harm.iter().map(vec3).collect();
    let n = harm.len();
    let cols: Vec<Vector> = harm
        .iter()
        .map(|h| linalg::express(&hv, &vec3(&m.star(h))).expect("⋆ preserves harmonic forms"))
        .collect();
    let s = Matrix::from_cols(n, &cols);
    let eig = |lambda: GScalar| -> Vec<Form<GScalar>> {
        let shifted = &s - &Matrix::<GScalar>::identity(n).map(|x: &GScalar| x * &lambda);
        shifted
            .nullspace()
            .into_iter()
            .map(|c| form3(&linalg::combine(&hv, &c, 20)))
            .collect()
    };
    StarSplit {
        plus: eig(GScalar::i()),
        minus: eig(-GScalar::i()),
    }
}

/// The harmonic representative of a closed 3-form.
pub fn harmonic_part(m: &Metric, u: &Form<GScalar>) -> Result<Form<GScalar>, MirrorError> {
    let harm: Vec<Vector> = m.harmonic(LaplacianKind::DeRham, Support::Degree(3)).iter().map(vec3).collect();
    let dr = BigradedComplex::standard().de_rham(3);
    let exact: Vec<Vector> = dr.boundary_basis().iter().map(vec3).collect();
    let mut gens = harm.clone();
    gens.extend(exact);
    let c = linalg::express(&gens, &vec3(u))
        .ok_or_else(|| MirrorError::DegreeMismatch("not a closed 3-form".into()))?;
    Ok(form3(&linalg::combine(&harm, &c[..harm.len()], 20)))
}

/// Which ⋆-eigenspace the class of a closed 3-form lies in, if any.
pub fn eigen_of_class(m: &Metric, u: &Form<GScalar>) -> Result<Option<Eigen>, MirrorError> {
    let h = harmonic_part(m, u)?;
    let s = m.star(&h);
    Ok(if s == h.scale(&GScalar::i()) {
        Some(Eigen::Plus)
    } else if s == h.scale(&-GScalar::i()) {
        Some(Eigen::Minus)
    } else {
        None
    })
}

/// ⋆ of the canonical metric Σ iφ_k∧φ̄_k written in frame coordinates: the
/// same constant matrix for every structure, since frame monomials are
/// orthonormal. Works over any coefficient ring (jets in particular).
pub fn star_frame_coords<C: Coeff>(v: &Form<C>) -> Form<C> {
    static TABLE: OnceLock<Vec<Form<GScalar>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let m0 = Metric::standard();
        (0..64u8).map(|s| m0.star(&Form::monomial(s as Mask, GScalar::one()))).collect()
    });
    let mut out = Form::zero();
    for (s, c) in v.terms() {
        out = out + table[s as usize].map(|x| C::from_scalar(x.clone())).scale(c);
    }
    out
}
