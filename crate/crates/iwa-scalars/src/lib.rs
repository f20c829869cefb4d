//! Exact scalars for invariant-form computations on the Iwasawa manifold.
//!
//! The tower is `GScalar` (Gaussian rationals) ⊂ `MultiPoly` ⊂ `RatFunc`, with
//! `Jet1` for first-order derivative checks. Parameters come in twelve formal
//! variables: `t11..t32` and their conjugates `s11..s32`, which only become
//! `conj(t)` at evaluation time.

mod coeff;
mod error;
mod gscalar;
mod jet;
mod matrix;
mod point;
mod poly;
mod ratfunc;
mod var;

pub use coeff::Coeff;
pub use error::ScalarError;
pub use gscalar::{parse_rational, GScalar};
pub use jet::Jet1;
pub use matrix::{Matrix, Rref};
pub use point::{sample_points, ParamPoint, SampleSpec};
pub use poly::{Exps, MultiPoly};
pub use ratfunc::RatFunc;
pub use var::ParamVar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
