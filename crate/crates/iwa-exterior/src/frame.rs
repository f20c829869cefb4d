use std::collections::BTreeMap;
use std::sync::OnceLock;

use iwa_scalars::{Coeff, Matrix};

use crate::mask::{self, Mask};
use crate::{ExteriorError, Form};

pub type Bidegree = (usize, usize);

/// A complex structure given by six covectors (φ₁,φ₂,φ₃, φ̄₁,φ̄₂,φ̄₃) written in
/// the fixed coframe. Row k of `rows` holds the fixed-basis coefficients of φ_k.
///
/// Forms "in frame coordinates" reuse the mask type with bits meaning the
/// frame covectors; bidegree in the frame is then a popcount.
pub struct Frame<C: Coeff> {
    rows: Matrix<C>,
    inv: Matrix<C>,
    to_frame_cache: Vec<OnceLock<Form<C>>>,
    from_frame_cache: Vec<OnceLock<Form<C>>>,
    d_frame_cache: Vec<OnceLock<Form<C>>>,
}

impl<C: Coeff> Clone for Frame<C> {
    fn clone(&self) -> Self {
        Frame::from_parts(self.rows.clone(), self.inv.clone())
    }
}

impl<C: Coeff> std::fmt::Debug for Frame<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Frame").field("rows", &self.rows).finish()
    }
}

impl<C: Coeff> Frame<C> {
    pub fn new(rows: Matrix<C>) -> Result<Self, ExteriorError> {
        assert_eq!((rows.rows(), rows.cols()), (6, 6), "frame must be 6x6");
        let inv = rows.inverse().ok_or(ExteriorError::FrameSingular)?;
        Ok(Frame::from_parts(rows, inv))
    }

    /// Builds a frame from its covectors (fixed-basis 1-forms).
    pub fn from_covectors(covectors: &[Form<C>]) -> Result<Self, ExteriorError> {
        assert_eq!(covectors.len(), 6);
        let rows = Matrix::from_rows(
            covectors
                .iter()
                .map(|f| (0..6).map(|k| f.coeff(1 << k)).collect())
                .collect(),
        );
        Frame::new(rows)
    }

    fn from_parts(rows: Matrix<C>, inv: Matrix<C>) -> Self {
        let cache = || (0..64).map(|_| OnceLock::new()).collect();
        Frame {
            rows,
            inv,
            to_frame_cache: cache(),
            from_frame_cache: cache(),
            d_frame_cache: cache(),
        }
    }

    pub fn identity() -> Self {
        Frame::from_parts(Matrix::identity(6), Matrix::identity(6))
    }

    pub fn rows(&self) -> &Matrix<C> {
        &self.rows
    }

    pub fn inverse(&self) -> &Matrix<C> {
        &self.inv
    }

    /// φ_k in the fixed coframe.
    pub fn covector(&self, k: usize) -> Form<C> {
        Form::from_terms((0..6).map(|j| (1 << j, self.rows[(k, j)].clone())))
    }

    /// Fixed-basis components of the vector ξ_k dual to φ_k.
    pub fn dual_vector(&self, k: usize) -> Vec<C> {
        (0..6).map(|j| self.inv[(j, k)].clone()).collect()
    }

    /// ξ_k ⌟ u for a fixed-basis form u.
    pub fn contract(&self, k: usize, u: &Form<C>) -> Form<C> {
        u.contract_vec(&self.dual_vector(k))
    }

    /// The frame monomial φ_m expressed in the fixed coframe.
    pub fn frame_monomial(&self, m: Mask) -> &Form<C> {
        self.from_frame_cache[m as usize].get_or_init(|| {
            let covs: Vec<Form<C>> = mask::indices(m).iter().map(|&k| self.covector(k)).collect();
            Form::wedge_all(&covs)
        })
    }

    /// The fixed monomial e_m expressed in the frame.
    fn fixed_in_frame(&self, m: Mask) -> &Form<C> {
        self.to_frame_cache[m as usize].get_or_init(|| {
            let covs: Vec<Form<C>> = mask::indices(m)
                .iter()
                .map(|&j| Form::from_terms((0..6).map(|k| (1 << k, self.inv[(j, k)].clone()))))
                .collect();
            Form::wedge_all(&covs)
        })
    }

    /// Re-expresses a fixed-basis form in frame coordinates.
    pub fn to_frame(&self, u: &Form<C>) -> Form<C> {
        let mut out = Form::zero();
        for (m, c) in u.terms() {
            out = out + self.fixed_in_frame(m).scale(c);
        }
        out
    }

    /// Inverse of `to_frame`.
    pub fn from_frame(&self, v: &Form<C>) -> Form<C> {
        let mut out = Form::zero();
        for (m, c) in v.terms() {
            out = out + self.frame_monomial(m).scale(c);
        }
        out
    }

    /// d(φ_m) in frame coordinates.
    pub fn d_frame_monomial(&self, m: Mask) -> &Form<C> {
        self.d_frame_cache[m as usize]
            .get_or_init(|| self.to_frame(&self.frame_monomial(m).d()))
    }

    /// Components by frame bidegree, each expressed back in the fixed basis.
    pub fn split(&self, u: &Form<C>) -> BTreeMap<Bidegree, Form<C>> {
        let v = self.to_frame(u);
        let mut parts: BTreeMap<Bidegree, Form<C>> = BTreeMap::new();
        for (m, c) in v.terms() {
            parts
                .entry(mask::bidegree(m))
                .or_default()
                .add_term(m, c.clone());
        }
        parts
            .into_iter()
            .map(|(pq, f)| (pq, self.from_frame(&f)))
            .collect()
    }

    /// The (p,q) component of a fixed-basis form, in the fixed basis.
    pub fn part(&self, u: &Form<C>, p: usize, q: usize) -> Form<C> {
        self.from_frame(&self.to_frame(u).filter(|m| mask::bidegree(m) == (p, q)))
    }

    /// ∂ or ∂̄ in frame coordinates: the (p+1,q) resp. (p,q+1) part of d on
    /// each pure piece.
    fn d_part_frame(&self, v: &Form<C>, holomorphic: bool) -> Form<C> {
        let mut out = Form::zero();
        for (m, c) in v.terms() {
            let (p, q) = mask::bidegree(m);
            let target = if holomorphic { (p + 1, q) } else { (p, q + 1) };
            let piece = self
                .d_frame_monomial(m)
                .filter(|n| mask::bidegree(n) == target);
            out = out + piece.scale(c);
        }
        out
    }

    pub fn del_frame(&self, v: &Form<C>) -> Form<C> {
        self.d_part_frame(v, true)
    }

    pub fn delbar_frame(&self, v: &Form<C>) -> Form<C> {
        self.d_part_frame(v, false)
    }

    /// ∂ for this structure on a fixed-basis form.
    pub fn del(&self, u: &Form<C>) -> Form<C> {
        self.from_frame(&self.del_frame(&self.to_frame(u)))
    }

    /// ∂̄ for this structure on a fixed-basis form.
    pub fn delbar(&self, u: &Form<C>) -> Form<C> {
        self.from_frame(&self.delbar_frame(&self.to_frame(u)))
    }

    /// Components of d(φ_m) outside bidegrees (p+1,q) and (p,q+1); empty for
    /// an integrable structure.
    pub fn integrability_defect(&self, m: Mask) -> Form<C> {
        let (p, q) = mask::bidegree(m);
        self.d_frame_monomial(m)
            .filter(|n| mask::bidegree(n) != (p + 1, q) && mask::bidegree(n) != (p, q + 1))
    }

    /// Top frame monomial in the fixed basis is det(rows) times the fixed top.
    pub fn top_factor(&self) -> C {
        self.frame_monomial(mask::TOP).top_coeff()
    }
}
