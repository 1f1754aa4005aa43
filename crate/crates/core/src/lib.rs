//! Exact computation of the action of the longest restricted Weyl element
//! on the vectors of an irreducible representation that are invariant under
//! the centralizer of a Cartan subspace.

pub mod cli;
pub mod error;
pub mod formula;
pub mod linalg;
pub mod oracle;
pub mod orthoset;
pub mod realforms;
pub mod reducer;
pub mod rootsys;
pub mod so1n;
pub mod subalg;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector, Q};
pub use rootsys::{CartanType, Character, Dominated, Family, RootSystem};
