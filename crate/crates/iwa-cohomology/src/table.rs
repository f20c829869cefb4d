use serde::Serialize;

use crate::{BigradedComplex, CohomologyError};

pub type Grid = [[usize; 4]; 4];

/// Dimensions of every cohomology of one complex structure; grids are
/// indexed `[p][q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyNumbers {
    pub betti: [usize; 7],
    pub dolbeault: Grid,
    pub bott_chern: Grid,
    pub aeppli: Grid,
    pub e2: Grid,
    pub e3: Grid,
    pub e_infinity: Grid,
}

fn grid(f: impl Fn(usize, usize) -> Result<usize, CohomologyError>) -> Result<Grid, CohomologyError> {
    let mut g = [[0; 4]; 4];
    for (p, row) in g.iter_mut().enumerate() {
        for (q, x) in row.iter_mut().enumerate() {
            *x = f(p, q)?;
        }
    }
    Ok(g)
}

impl CohomologyNumbers {
    pub fn compute(c: &BigradedComplex) -> Result<Self, CohomologyError> {
        let mut betti = [0; 7];
        for (k, b) in betti.iter_mut().enumerate() {
            *b = c.de_rham(k).dimension();
        }
        Ok(CohomologyNumbers {
            betti,
            dolbeault: grid(|p, q| Ok(c.dolbeault(p, q).dimension()))?,
            bott_chern: grid(|p, q| Ok(c.bott_chern(p, q).dimension()))?,
            aeppli: grid(|p, q| Ok(c.aeppli(p, q).dimension()))?,
            e2: grid(|p, q| Ok(c.frolicher_e2(p, q)?.dimension()))?,
            e3: grid(|p, q| Ok(c.frolicher_filtered(3, p, q).dimension()))?,
            e_infinity: grid(|p, q| Ok(c.frolicher_filtered(4, p, q).dimension()))?,
        })
    }

    /// Σ_{p+q=k} of a grid.
    pub fn diagonal_sum(g: &Grid, k: usize) -> usize {
        (0..4)
            .filter(|&p| k >= p && k - p < 4)
            .map(|p| g[p][k - p])
            .sum()
    }
}
