//! Finite semirings and semimodules: axiom checking, subtractive closures,
//! k-ideal lattices, exactness, direct summands and injectivity tests.

// carriers are 0..n and tables are indexed by element
#![allow(clippy::needless_range_loop)]

pub mod caps;
pub mod case;
pub mod elemset;
pub mod injectivity;
pub mod error;
pub mod format;
pub mod lattice;
pub mod mat2;
pub mod monoid;
pub mod qplus;
pub mod morphism;
pub mod semimodule;
pub mod semiring;
pub mod structure;
pub mod zoo;

pub use caps::Caps;
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use lattice::{KIdealLattice, LatticeMetrics};
pub use monoid::AdditiveMonoid;
pub use morphism::LinearMap;
pub use semimodule::{FiniteSemimodule, Subsemimodule};
pub use semiring::{FiniteSemiring, SemiringTables};
