//! Finite groups given by multiplication tables, their subgroup lattices,
//! and element- and lattice-level commutativity degrees.

pub mod characters;
pub mod claims;
pub mod degrees;
pub mod error;
pub mod exec;
pub mod group;
pub mod lattice;
pub mod mask;
pub mod rational;

pub use error::{Error, Result};
pub use exec::Exec;
pub use group::{Family, Group, Subgroup};
pub use lattice::{enumerate_subgroups, Lattice};
pub use mask::Mask;
pub use rational::Rational;
