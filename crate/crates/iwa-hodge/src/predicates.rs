use iwa_cohomology::linalg;
use iwa_exterior::{render_form, Form};
use iwa_scalars::{GScalar, Matrix};
use serde::Serialize;

use crate::{Metric, Op, Support};

/// Verdict of one metric condition, with the obstructing form when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    fn zero(u: &Form<GScalar>) -> Self {
        Verdict {
            holds: u.is_zero(),
            witness: (!u.is_zero()).then(|| render_form(u)),
        }
    }
}

/// Conditions on ω with n = 3, decided on ω²:
/// Gauduchon ∂∂̄ω² = 0; strongly Gauduchon ∂ω² ∈ im ∂̄; balanced dω² = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricPredicates {
    pub positive: bool,
    pub kahler: Verdict,
    pub balanced: Verdict,
    pub strongly_gauduchon: Verdict,
    pub gauduchon: Verdict,
}

pub fn metric_predicates(m: &Metric) -> MetricPredicates {
    let w = m.omega();
    let w2 = w.wedge(&w);
    let del = m.apply(Op::Del, &w2);
    let psi = m.psi();
    let src = Support::Bidegree(3, 1).masks();
    let dst = Support::Bidegree(3, 2).masks();
    let cols: Vec<Vec<GScalar>> = src
        .iter()
        .map(|&s| psi.delbar_frame(&Form::monomial(s, GScalar::one())).to_vec(&dst))
        .collect();
    let image = linalg::image(&Matrix::from_cols(dst.len(), &cols));
    let exact = linalg::in_span(&image, &psi.to_frame(&del).to_vec(&dst));
    MetricPredicates {
        positive: m.is_positive(),
        kahler: Verdict::zero(&w.d()),
        balanced: Verdict::zero(&w2.d()),
        strongly_gauduchon: Verdict {
            holds: exact,
            witness: (!exact).then(|| render_form(&del)),
        },
        gauduchon: Verdict::zero(&m.apply(Op::DelDelBar, &w2)),
    }
}
