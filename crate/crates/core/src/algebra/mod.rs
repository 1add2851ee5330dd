//! Exact coefficient fields, Laurent polynomials, rational functions and matrices.

mod gaussian;
mod io;
mod laurent;
mod matrix;
mod multiquad;
#[doc(hidden)]
pub mod ops;
mod poly;
pub mod prime;
mod projective;
mod ratfunc;
mod rational;
mod ring;

pub use gaussian::Gaussian;
pub use io::{MatrixJson, TextRing};
pub use laurent::LaurentPoly;
pub use matrix::{LMat, Matrix, RMat};
pub use multiquad::{MultiQuad, MAX_TOWER_PRIMES};
pub use poly::Poly;
pub use prime::{is_prime, Fp};
pub use projective::{
    canonical_projective, projective_ratio, projective_unitary_scalar, projective_unitary_scalar_laurent,
    unitary_defect, ProjMat,
};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use ring::{Field, FieldTag, Ring};
