//! Projective similitude group of the 2x2 Hermitian form `diag(1, t^-1 + t)`.

mod gens;
mod normal_form;
mod relations;

pub use gens::*;
pub use normal_form::*;
pub use relations::*;
