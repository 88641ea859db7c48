//! Sign- and maj-imbalance of finite posets and partition shapes.
//!
//! The crate enumerates linear extensions of small posets, computes the
//! generating functions of their inversion and major-index statistics, and
//! implements the surrounding combinatorics: promotion and evacuation,
//! partition shapes and their 2-cores, domino tableaux, domino tilings of
//! regions, hook-length formulas, shifted tableaux and the Schur-basis
//! operators `U(q)`, `D(q)`. The [`verify`] module checks the known identities
//! against brute force and produces JSON reports.

pub mod error;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod promotion;
pub mod shapes;
pub mod domino;
pub mod region;
pub mod balance;
pub mod identities;
pub mod generate;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{MultiPolynomial, QPolynomial, Var};
pub use poset::{Labeling, LinearExtension, Poset};
