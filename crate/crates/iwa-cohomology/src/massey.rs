use iwa_exterior::{mask, Form};
use iwa_scalars::{GScalar, Matrix};

use crate::linalg::Vector;
use crate::{BigradedComplex, CohomologyError, CohomologySpace};

/// A defined triple Massey product ⟨a, b, c⟩ of closed 1-forms.
#[derive(Clone, Debug)]
pub struct MasseyProduct {
    /// x ∧ c + a ∧ y with dx = a∧b, dy = b∧c.
    pub representative: Form<GScalar>,
    /// a ∪ H¹ + H¹ ∪ c as forms.
    pub indeterminacy: Vec<Form<GScalar>>,
    /// Whether the representative class lies in the indeterminacy.
    pub trivial: bool,
}

#[derive(Clone, Debug)]
pub enum MasseyOutcome {
    /// a∧b or b∧c is not exact.
    NotDefined,
    Defined(MasseyProduct),
}

impl MasseyOutcome {
    pub fn is_defined(&self) -> bool {
        matches!(self, MasseyOutcome::Defined(_))
    }

    /// Defined and not contained in the indeterminacy.
    pub fn is_nontrivial(&self) -> bool {
        matches!(self, MasseyOutcome::Defined(m) if !m.trivial)
    }
}

fn d_matrix_degree1() -> Matrix<GScalar> {
    let src = mask::of_degree(1);
    let dst = mask::of_degree(2);
    let cols: Vec<Vector> = src
        .iter()
        .map(|&m| Form::monomial(m, GScalar::one()).d().to_vec(&dst))
        .collect();
    Matrix::from_cols(dst.len(), &cols)
}

/// A 1-form x with dx = u, if any.
pub fn primitive(u: &Form<GScalar>) -> Option<Form<GScalar>> {
    let dst = mask::of_degree(2);
    if u.terms().any(|(m, _)| mask::degree(m) != 2) {
        return None;
    }
    d_matrix_degree1()
        .solve(&u.to_vec(&dst))
        .map(|x| Form::from_vec(&mask::of_degree(1), &x))
}

pub fn massey_triple(
    a: &Form<GScalar>,
    b: &Form<GScalar>,
    c: &Form<GScalar>,
) -> Result<MasseyOutcome, CohomologyError> {
    let complex = BigradedComplex::standard();
    let h1 = complex.de_rham(1);
    for u in [a, b, c] {
        if !h1.is_cycle(u) {
            return Err(CohomologyError::NotACycle(h1.kind().to_string()));
        }
    }
    let (Some(x), Some(y)) = (primitive(&a.wedge(b)), primitive(&b.wedge(c))) else {
        return Ok(MasseyOutcome::NotDefined);
    };
    let representative = x.wedge(c) + a.wedge(&y);
    let reps = h1.representatives();
    let indeterminacy: Vec<Form<GScalar>> = reps
        .iter()
        .map(|h| a.wedge(h))
        .chain(reps.iter().map(|h| h.wedge(c)))
        .collect();
    let h2 = complex.de_rham(2);
    let trivial = in_class_span(&h2, &representative, &indeterminacy)?;
    Ok(MasseyOutcome::Defined(MasseyProduct {
        representative,
        indeterminacy,
        trivial,
    }))
}

fn in_class_span(
    space: &CohomologySpace,
    u: &Form<GScalar>,
    span: &[Form<GScalar>],
) -> Result<bool, CohomologyError> {
    let base = space.class_rank(span)?;
    let mut all = span.to_vec();
    all.push(u.clone());
    Ok(space.class_rank(&all)? == base)
}
