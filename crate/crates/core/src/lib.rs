//! Exact computation of Poincaré series of spaces of commuting tuples in
//! compact Lie groups, together with the Weyl-group invariant theory that
//! underlies them.
//!
//! Modules:
//! - [`exactalg`]: big-rational polynomials and rational functions
//! - [`partitions`]: (signed) integer partitions, embedding counts,
//!   Stirling numbers
//! - [`weylgroups`]: symmetric / signed-symmetric / exceptional Weyl
//!   groups and their determinant factors
//! - [`poincare`]: closed-form series and the Weyl-average oracle
//! - [`analysis`]: top terms, palindromy, stability ranges
//! - [`invariants`]: brute-force invariant rings, minimal generators,
//!   Newton-type identities
//! - [`refdata`]: vendored fixture series, degree tables, Cartan matrices
//! - [`verify`]: the property suites run by the CLI

// Parity tests read better as `% 2 == 0` in combinatorial code.
#![allow(clippy::manual_is_multiple_of)]

pub mod analysis;
pub mod error;
pub mod exactalg;
pub mod invariants;
pub mod partitions;
pub mod poincare;
pub mod refdata;
pub mod verify;
pub mod weylgroups;

pub use analysis::{SeriesReport, StabilityReport, TopTerm};
pub use error::{Error, Result};
pub use exactalg::{Poly, RatFn, Rational};
pub use partitions::{Partition, SignedPartition};
pub use poincare::{Budget, Method, OracleMode, SeriesRequest};
pub use refdata::{CartanSpec, FixtureSeries};
pub use weylgroups::{Family, GroupSpec, WeylElement};
