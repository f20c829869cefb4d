use std::sync::Arc;

use iwa_deformation::ComplexStructure;
use iwa_exterior::mask::{self, Mask};
use iwa_exterior::{Form, Frame};
use iwa_scalars::{GScalar, Matrix};

use crate::linalg::{self, Vector};
use crate::space::{Coords, SpaceKind};
use crate::{CohomologyError, CohomologySpace};

/// Monomials of frame bidegree (p, q); empty outside 0..=3.
pub fn bidegree_basis(p: isize, q: isize) -> Vec<Mask> {
    if !(0..=3).contains(&p) || !(0..=3).contains(&q) {
        return Vec::new();
    }
    mask::of_bidegree(p as usize, q as usize)
}

fn degree_basis(k: isize) -> Vec<Mask> {
    if !(0..=6).contains(&k) {
        return Vec::new();
    }
    mask::of_degree(k as usize)
}

/// The double complex (A^{•,•}, ∂, ∂̄) of invariant forms for one complex
/// structure, written in its frame.
#[derive(Clone, Debug)]
pub struct BigradedComplex {
    frame: Arc<Frame<GScalar>>,
}

impl BigradedComplex {
    pub fn new(j: &ComplexStructure) -> Self {
        BigradedComplex {
            frame: Arc::new(j.frame().clone()),
        }
    }

    pub fn standard() -> Self {
        BigradedComplex::from_frame(Frame::identity())
    }

    pub fn from_frame(frame: Frame<GScalar>) -> Self {
        BigradedComplex {
            frame: Arc::new(frame),
        }
    }

    pub fn frame(&self) -> &Frame<GScalar> {
        &self.frame
    }

    /// Matrix of a frame-coordinate operator from `src` to `dst` monomials.
    fn op_matrix(&self, src: &[Mask], dst: &[Mask], f: impl Fn(&Form<GScalar>) -> Form<GScalar>) -> Matrix<GScalar> {
        let cols: Vec<Vector> = src
            .iter()
            .map(|&m| {
                let img = f(&Form::monomial(m, GScalar::one()));
                debug_assert!(img.terms().all(|(n, _)| dst.contains(&n)));
                img.to_vec(dst)
            })
            .collect();
        Matrix::from_cols(dst.len(), &cols)
    }

    pub fn del_matrix(&self, p: isize, q: isize) -> Matrix<GScalar> {
        self.op_matrix(&bidegree_basis(p, q), &bidegree_basis(p + 1, q), |u| self.frame.del_frame(u))
    }

    pub fn delbar_matrix(&self, p: isize, q: isize) -> Matrix<GScalar> {
        self.op_matrix(&bidegree_basis(p, q), &bidegree_basis(p, q + 1), |u| {
            self.frame.delbar_frame(u)
        })
    }

    pub fn deldelbar_matrix(&self, p: isize, q: isize) -> Matrix<GScalar> {
        self.op_matrix(&bidegree_basis(p, q), &bidegree_basis(p + 1, q + 1), |u| {
            self.frame.del_frame(&self.frame.delbar_frame(u))
        })
    }

    /// d on degree-k forms in frame coordinates.
    pub fn d_frame_matrix(&self, k: isize) -> Matrix<GScalar> {
        self.op_matrix(&degree_basis(k), &degree_basis(k + 1), |u| {
            let mut out = Form::zero();
            for (m, c) in u.terms() {
                out = out + self.frame.d_frame_monomial(m).scale(c);
            }
            out
        })
    }

    fn space(&self, kind: SpaceKind, coords: Coords, basis: Vec<Mask>, cycles: Vec<Vector>, boundaries: Vec<Vector>) -> CohomologySpace {
        CohomologySpace::new(kind, self.frame.clone(), coords, basis, cycles, boundaries)
    }

    /// H^k_DR on the fixed coframe (d does not depend on the structure).
    pub fn de_rham(&self, k: usize) -> CohomologySpace {
        let k = k as isize;
        let d = |k: isize| {
            self.op_matrix(&degree_basis(k), &degree_basis(k + 1), |u| u.d())
        };
        self.space(
            SpaceKind::DeRham(k as usize),
            Coords::Fixed,
            degree_basis(k),
            linalg::kernel(&d(k)),
            linalg::image(&d(k - 1)),
        )
    }

    pub fn dolbeault(&self, p: usize, q: usize) -> CohomologySpace {
        let (p, q) = (p as isize, q as isize);
        self.space(
            SpaceKind::Dolbeault(p as usize, q as usize),
            Coords::Frame,
            bidegree_basis(p, q),
            linalg::kernel(&self.delbar_matrix(p, q)),
            linalg::image(&self.delbar_matrix(p, q - 1)),
        )
    }

    pub fn bott_chern(&self, p: usize, q: usize) -> CohomologySpace {
        let (p, q) = (p as isize, q as isize);
        let both = self.del_matrix(p, q).vstack(&self.delbar_matrix(p, q));
        self.space(
            SpaceKind::BottChern(p as usize, q as usize),
            Coords::Frame,
            bidegree_basis(p, q),
            linalg::kernel(&both),
            linalg::image(&self.deldelbar_matrix(p - 1, q - 1)),
        )
    }

    pub fn aeppli(&self, p: usize, q: usize) -> CohomologySpace {
        let (p, q) = (p as isize, q as isize);
        let n = bidegree_basis(p, q).len();
        let boundaries = linalg::sum(
            &linalg::image(&self.del_matrix(p - 1, q)),
            &linalg::image(&self.delbar_matrix(p, q - 1)),
            n,
        );
        self.space(
            SpaceKind::Aeppli(p as usize, q as usize),
            Coords::Frame,
            bidegree_basis(p, q),
            linalg::kernel(&self.deldelbar_matrix(p, q)),
            boundaries,
        )
    }

    /// Z_r^p in total degree k: x ∈ F^p with dx ∈ F^{p+r}.
    fn z(&self, r: isize, p: isize, k: isize) -> Vec<Vector> {
        let basis = degree_basis(k);
        let n = basis.len();
        let hol = |m: Mask| mask::bidegree(m).0 as isize;
        let src: Vec<usize> = (0..n).filter(|&i| hol(basis[i]) >= p).collect();
        if src.is_empty() {
            return Vec::new();
        }
        let d = self.d_frame_matrix(k);
        let target = degree_basis(k + 1);
        let low: Vec<usize> = (0..target.len()).filter(|&i| hol(target[i]) < p + r).collect();
        let m = Matrix::from_rows(
            low.iter()
                .map(|&i| src.iter().map(|&j| d[(i, j)].clone()).collect())
                .collect(),
        );
        let kernel = if low.is_empty() {
            (0..src.len())
                .map(|i| (0..src.len()).map(|j| if i == j { GScalar::one() } else { GScalar::zero() }).collect())
                .collect()
        } else {
            m.nullspace()
        };
        kernel
            .into_iter()
            .map(|c| {
                let mut v = vec![GScalar::zero(); n];
                for (x, &j) in c.into_iter().zip(&src) {
                    v[j] = x;
                }
                v
            })
            .collect()
    }

    /// E_r^{p,q} = Z_r^p / (Z_{r−1}^{p+1} + d Z_{r−1}^{p−r+1}) on the filtered
    /// complex of total degree p+q.
    pub fn frolicher_filtered(&self, r: usize, p: usize, q: usize) -> CohomologySpace {
        let (ri, pi, k) = (r as isize, p as isize, (p + q) as isize);
        let n = degree_basis(k).len();
        let cycles = self.z(ri, pi, k);
        let lower = self.z(ri - 1, pi + 1, k);
        let d = self.d_frame_matrix(k - 1);
        let dz: Vec<Vector> = self
            .z(ri - 1, pi - ri + 1, k - 1)
            .iter()
            .map(|v| d.mul_vec(v))
            .collect();
        self.space(
            SpaceKind::Frolicher { r, p, q },
            Coords::Frame,
            degree_basis(k),
            cycles,
            linalg::sum(&lower, &dz, n),
        )
    }

    /// E₁ = Dolbeault cohomology.
    pub fn frolicher_e1(&self, p: usize, q: usize) -> CohomologySpace {
        let mut s = self.dolbeault(p, q);
        s.set_kind(SpaceKind::Frolicher { r: 1, p, q });
        s
    }

    /// E₂^{p,q} as the cohomology of d₁ = [∂] on E₁, lifted to forms:
    /// cycles {x : ∂̄x = 0, ∂x ∈ im ∂̄}, boundaries im ∂̄ + ∂(ker ∂̄).
    /// Well-definedness of d₁ is checked first.
    pub fn frolicher_e2(&self, p: usize, q: usize) -> Result<CohomologySpace, CohomologyError> {
        self.check_d1(p, q)?;
        let (p, q) = (p as isize, q as isize);
        let n = bidegree_basis(p, q).len();
        let m = bidegree_basis(p + 1, q - 1).len();
        // (x, z) with ∂̄x = 0 and ∂x − ∂̄z = 0
        let dbar = self.delbar_matrix(p, q);
        let del = self.del_matrix(p, q);
        let dbar_z = self.delbar_matrix(p + 1, q - 1);
        let rows_a = dbar.hstack(&Matrix::zeros(dbar.rows(), m));
        let neg = dbar_z.map(|x| -x.clone());
        let rows_b = del.hstack(&neg);
        let sys = rows_a.vstack(&rows_b);
        let cycles: Vec<Vector> = if sys.rows() == 0 {
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { GScalar::one() } else { GScalar::zero() }).collect())
                .collect()
        } else {
            sys.nullspace().into_iter().map(|v| v[..n].to_vec()).collect()
        };
        let delbar_closed_prev = linalg::kernel(&self.delbar_matrix(p - 1, q));
        let del_prev = self.del_matrix(p - 1, q);
        let del_images: Vec<Vector> = delbar_closed_prev.iter().map(|v| del_prev.mul_vec(v)).collect();
        let boundaries = linalg::sum(&linalg::image(&self.delbar_matrix(p, q - 1)), &del_images, n);
        Ok(self.space(
            SpaceKind::Frolicher { r: 2, p: p as usize, q: q as usize },
            Coords::Frame,
            bidegree_basis(p, q),
            cycles,
            boundaries,
        ))
    }

    /// d₁: E₁^{p,q} → E₁^{p+1,q} is well defined: ∂ maps ∂̄-cycles to ∂̄-cycles
    /// and ∂̄-boundaries to ∂̄-boundaries.
    pub fn check_d1(&self, p: usize, q: usize) -> Result<(), CohomologyError> {
        let (pi, qi) = (p as isize, q as isize);
        let del = self.del_matrix(pi, qi);
        let dbar_next = self.delbar_matrix(pi + 1, qi);
        let next_bd = linalg::image(&self.delbar_matrix(pi + 1, qi - 1));
        for x in linalg::kernel(&self.delbar_matrix(pi, qi)) {
            let y = del.mul_vec(&x);
            if !dbar_next.mul_vec(&y).iter().all(GScalar::is_zero) {
                return Err(CohomologyError::WellDefinedness(format!("∂ of a ∂̄-cycle in ({p},{q}) is not ∂̄-closed")));
            }
        }
        for b in linalg::image(&self.delbar_matrix(pi, qi - 1)) {
            if !linalg::in_span(&next_bd, &del.mul_vec(&b)) {
                return Err(CohomologyError::WellDefinedness(format!("∂ of a ∂̄-boundary in ({p},{q}) is not a boundary")));
            }
        }
        Ok(())
    }
}
