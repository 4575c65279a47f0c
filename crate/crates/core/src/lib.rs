//! Twisted Hurwitz numbers and the surfaces behind them.
//!
//! A twisted Hurwitz number `h~_{m,λ}` counts decompositions of a surface
//! with boundary into disks joined by `m` ribbons, weighted by `1/n!`, where
//! the boundary circles carry `λ_1, …, λ_s` marked points. This crate
//! computes them three independent ways and cross-checks the results:
//!
//! - [`enumerate`]: brute-force tally over sequences of admissible
//!   transpositions in `S_2n`;
//! - [`symfunc`]: repeated application of the twisted cut-and-join operator
//!   to `p_1^n / n!` in the power-sum basis;
//! - [`jack`]: the closed form through zonal polynomials and hook products.
//!
//! [`surgery`] works with the ribbon decompositions themselves: orientation
//! covers, the map to transposition sequences, and surface classification.
//!
//! All arithmetic is exact.

pub mod enumerate;
pub mod error;
pub mod jack;
pub mod partition;
pub mod perm;
pub mod surgery;
pub mod symfunc;

pub use enumerate::{enumerate, hurwitz_enumerated, Budget, HurwitzCount, TranspositionSequence};
pub use error::{Error, Result};
pub use jack::{hurwitz_by_zonal, jack_polynomial, zonal, JackPolynomial};
pub use partition::{partitions_of, Cell, Partition, Rational};
pub use perm::{tau, Permutation, Transposition, TwistedClassification};
pub use surgery::{Gluing, RibbonDecomposition, Sign, SurfaceReport};
pub use symfunc::{hurwitz_by_cutjoin, PSeries};
