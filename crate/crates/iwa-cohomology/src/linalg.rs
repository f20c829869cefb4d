//! Row-space helpers over ℚ(i). Vectors are coefficient lists on a fixed
//! monomial basis.

use iwa_scalars::{GScalar, Matrix};

pub type Vector = Vec<GScalar>;

/// Reduced echelon basis of the span of `vectors` (all of length `n`).
pub fn span_basis(vectors: &[Vector], n: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec());
    let r = m.rref();
    debug_assert_eq!(m.cols(), n);
    (0..r.pivots.len()).map(|i| r.matrix.row(i).to_vec()).collect()
}

pub fn rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Kernel of `m` as a list of vectors.
pub fn kernel(m: &Matrix<GScalar>) -> Vec<Vector> {
    m.nullspace()
}

/// Column space of `m` in reduced echelon form.
pub fn image(m: &Matrix<GScalar>) -> Vec<Vector> {
    let cols: Vec<Vector> = (0..m.cols()).map(|j| m.col(j)).collect();
    span_basis(&cols, m.rows())
}

/// Completes `base` by elements of `candidates`, in order, to a basis of
/// span(base ∪ candidates); returns the added candidates.
pub fn complement(base: &[Vector], candidates: &[Vector]) -> Vec<Vector> {
    let mut current: Vec<Vector> = base.to_vec();
    let mut r = rank(&current);
    let mut out = Vec::new();
    for c in candidates {
        current.push(c.clone());
        let r2 = rank(&current);
        if r2 > r {
            r = r2;
            out.push(c.clone());
        } else {
            current.pop();
        }
    }
    out
}

/// Coefficients of `v` in terms of `vectors`, if it lies in their span.
pub fn express(vectors: &[Vector], v: &[GScalar]) -> Option<Vector> {
    if vectors.is_empty() {
        return v.iter().all(GScalar::is_zero).then(Vec::new);
    }
    Matrix::from_cols(v.len(), vectors).solve(v)
}

pub fn in_span(vectors: &[Vector], v: &[GScalar]) -> bool {
    express(vectors, v).is_some()
}

/// Basis of the intersection of two subspaces.
pub fn intersection(a: &[Vector], b: &[Vector], n: usize) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // x = Σ λ_i a_i = Σ μ_j b_j  ⇔  [A | −B](λ, μ) = 0
    let neg_b: Vec<Vector> = b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()).collect();
    let mut cols = a.to_vec();
    cols.extend(neg_b);
    let m = Matrix::from_cols(n, &cols);
    let combos: Vec<Vector> = m
        .nullspace()
        .into_iter()
        .map(|c| combine(a, &c[..a.len()], n))
        .collect();
    span_basis(&combos, n)
}

pub fn combine(vectors: &[Vector], coeffs: &[GScalar], n: usize) -> Vector {
    let mut out = vec![GScalar::zero(); n];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = &*o + &(x * c);
            }
        }
    }
    out
}

pub fn sum(a: &[Vector], b: &[Vector], n: usize) -> Vec<Vector> {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    span_basis(&all, n)
}
