use std::fmt;
use std::sync::Arc;

use iwa_exterior::{Form, Frame, Mask};
use iwa_scalars::GScalar;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Vector};
use crate::CohomologyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceKind {
    DeRham(usize),
    Dolbeault(usize, usize),
    BottChern(usize, usize),
    Aeppli(usize, usize),
    /// Page r of the Frölicher spectral sequence at (p, q).
    Frolicher { r: usize, p: usize, q: usize },
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::DeRham(k) => write!(f, "H^{k}_DR"),
            SpaceKind::Dolbeault(p, q) => write!(f, "H^{{{p},{q}}}_dbar"),
            SpaceKind::BottChern(p, q) => write!(f, "H^{{{p},{q}}}_BC"),
            SpaceKind::Aeppli(p, q) => write!(f, "H^{{{p},{q}}}_A"),
            SpaceKind::Frolicher { r, p, q } => write!(f, "E_{r}^{{{p},{q}}}"),
        }
    }
}

/// Coordinates in which the vectors of a space are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    /// Fixed coframe monomials.
    Fixed,
    /// Monomials in the frame of the complex structure.
    Frame,
}

/// A subquotient cycles/boundaries of the invariant forms on a list of
/// monomials, with a chosen complement of representatives.
#[derive(Clone)]
pub struct CohomologySpace {
    kind: SpaceKind,
    frame: Arc<Frame<GScalar>>,
    coords: Coords,
    basis: Vec<Mask>,
    cycles: Vec<Vector>,
    boundaries: Vec<Vector>,
    reps: Vec<Vector>,
}

impl fmt::Debug for CohomologySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CohomologySpace")
            .field("kind", &self.kind)
            .field("dimension", &self.dimension())
            .field("cycles", &self.cycles.len())
            .field("boundaries", &self.boundaries.len())
            .finish()
    }
}

impl CohomologySpace {
    pub(crate) fn new(
        kind: SpaceKind,
        frame: Arc<Frame<GScalar>>,
        coords: Coords,
        basis: Vec<Mask>,
        cycles: Vec<Vector>,
        boundaries: Vec<Vector>,
    ) -> Self {
        let n = basis.len();
        let cycles = linalg::span_basis(&cycles, n);
        let boundaries = linalg::span_basis(&boundaries, n);
        debug_assert!(boundaries.iter().all(|b| linalg::in_span(&cycles, b)));
        let reps = linalg::complement(&boundaries, &cycles);
        CohomologySpace {
            kind,
            frame,
            coords,
            basis,
            cycles,
            boundaries,
            reps,
        }
    }

    pub(crate) fn set_kind(&mut self, kind: SpaceKind) {
        self.kind = kind;
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.reps.len()
    }

    pub fn basis_masks(&self) -> &[Mask] {
        &self.basis
    }

    pub fn coords(&self) -> Coords {
        self.coords
    }

    pub fn frame(&self) -> &Frame<GScalar> {
        &self.frame
    }

    /// Coordinates of a fixed-basis form on the ambient monomials.
    pub fn vector_of(&self, u: &Form<GScalar>) -> Result<Vector, CohomologyError> {
        let v = match self.coords {
            Coords::Fixed => u.clone(),
            Coords::Frame => self.frame.to_frame(u),
        };
        if v.terms().any(|(m, _)| !self.basis.contains(&m)) {
            return Err(CohomologyError::WrongDegree(self.kind.to_string()));
        }
        Ok(v.to_vec(&self.basis))
    }

    pub fn form_of(&self, v: &[GScalar]) -> Form<GScalar> {
        let f = Form::from_vec(&self.basis, v);
        match self.coords {
            Coords::Fixed => f,
            Coords::Frame => self.frame.from_frame(&f),
        }
    }

    pub fn representatives(&self) -> Vec<Form<GScalar>> {
        self.reps.iter().map(|v| self.form_of(v)).collect()
    }

    pub fn cycle_basis(&self) -> Vec<Form<GScalar>> {
        self.cycles.iter().map(|v| self.form_of(v)).collect()
    }

    pub fn boundary_basis(&self) -> Vec<Form<GScalar>> {
        self.boundaries.iter().map(|v| self.form_of(v)).collect()
    }

    pub fn representative_vectors(&self) -> &[Vector] {
        &self.reps
    }

    pub fn is_cycle(&self, u: &Form<GScalar>) -> bool {
        self.vector_of(u)
            .map(|v| linalg::in_span(&self.cycles, &v))
            .unwrap_or(false)
    }

    pub fn is_boundary(&self, u: &Form<GScalar>) -> bool {
        self.vector_of(u)
            .map(|v| linalg::in_span(&self.boundaries, &v))
            .unwrap_or(false)
    }

    /// Class coordinates of a cycle against [`representatives`](Self::representatives).
    pub fn class_coords(&self, u: &Form<GScalar>) -> Result<Vector, CohomologyError> {
        let v = self.vector_of(u)?;
        let mut gens = self.reps.clone();
        gens.extend(self.boundaries.iter().cloned());
        let c = linalg::express(&gens, &v).ok_or(CohomologyError::NotACycle(self.kind.to_string()))?;
        Ok(c[..self.reps.len()].to_vec())
    }

    /// Dimension of the span of the classes of the given cycles.
    pub fn class_rank(&self, forms: &[Form<GScalar>]) -> Result<usize, CohomologyError> {
        let coords = forms
            .iter()
            .map(|u| self.class_coords(u))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(linalg::rank(&coords))
    }
}
