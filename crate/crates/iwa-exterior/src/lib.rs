//! The rank-64 exterior algebra over the invariant coframe
//! (α, β, γ, ᾱ, β̄, γ̄) = bits 0..5 of a mask, with dγ = −α∧β.

mod error;
mod form;
mod frame;
pub mod mask;
mod text;

pub use error::ExteriorError;
pub use form::Form;
pub use frame::{Bidegree, Frame};
pub use mask::Mask;
pub use text::{parse_form, render_form, FormJson};
