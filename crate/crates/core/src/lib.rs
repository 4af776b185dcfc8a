//! Exact enumeration of cyclic permutations that avoid a decreasing pattern
//! in one-line notation while their cycle form avoids a second pattern.
//!
//! The brute-force [`Oracle`] is the ground truth. [`Recurrences`] and the
//! rational generating functions in [`genfun`] are fast paths that must agree
//! with it, and [`bijections`] makes the underlying decompositions executable.

pub mod bijections;
pub mod cli;
pub mod conjectures;
pub mod error;
pub mod family;
pub mod genfun;
pub mod oracle;
pub mod perm;
pub mod recurrences;
pub mod table;

pub use error::{Error, Result};
pub use family::{Family, VerifyReport};
pub use genfun::{Poly, RationalGF};
pub use oracle::{AvoidanceQuery, CycleMode, Oracle};
pub use perm::{CycleForm, Pattern, Permutation, Symmetry, Word};
pub use recurrences::Recurrences;
pub use table::{CountTable, Source};
