//! Exact computations with Burau matrices, unitary groups over Laurent
//! polynomial rings, lattice classes in the rank-two affine building and
//! Stallings foldings.

pub mod algebra;
pub mod braid;
pub mod building;
pub mod burau;
pub mod check;
pub mod counterexample;
pub mod error;
pub mod similitude;
pub mod stallings;
pub mod suite;

pub use error::{Error, Result};
