//! Lattice classes of the rank-two affine building at the place at infinity,
//! the unitary generators acting on it, and bounded exploration of orbits.

mod explore;
mod gens;
mod identities;
mod lattice;

pub use explore::*;
pub use gens::*;
pub use identities::*;
pub use lattice::*;
