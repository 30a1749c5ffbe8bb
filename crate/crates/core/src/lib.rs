//! Exact decategorified invariants of twisted graded categories.
//!
//! The crate computes braiding characters of tensor powers, dimensions of
//! exterior and symmetric powers, and the sign decisions for graded
//! categories of E-theory modules, and checks the closed forms against an
//! explicit model built from signed permutation matrices ([`oracle`]).
//!
//! All arithmetic is exact: integers are arbitrary precision and rationals
//! only appear inside averages that must cancel.

pub mod braidchar;
pub mod chromatic;
pub mod cli;
pub mod coeffring;
pub mod error;
pub mod extalg;
pub mod graded;
pub mod oracle;
pub mod symgroup;
pub mod verify;

pub use braidchar::{braiding_character, induced_character_value, ActionFlag, CharacterRow, CharacterTable};
pub use coeffring::{LaurentSeries, Ring, Sign, SignedUnitValue, TruncatedSeries};
pub use error::{Error, Result};
pub use graded::{count_twists, dim_shift, FiniteAbelianGroup, GradedDim, Twist};
pub use symgroup::{partitions, LoopComponentCyclic, Partition};
