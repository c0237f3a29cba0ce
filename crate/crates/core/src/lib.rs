//! Concordance obstructions for knots from Heegaard Floer correction terms of
//! the double branched cover.
//!
//! The pipeline runs diagram → Goeritz form → spin^c classes → correction
//! terms → D invariants:
//!
//! ```
//! use grs_core::{obstruction, KnotInput, Verdict};
//!
//! let input = KnotInput::Matrix(grs_core::parse_matrix("[[-3]]").unwrap());
//! let report = obstruction(&input, "trefoil").unwrap();
//! assert_eq!(report.det.to_string(), "3");
//! assert_eq!(report.verdict, Verdict::InfiniteOrder);
//! ```
//!
//! The lattice layer ([`intlat`] and the maximizer in [`dinv`]) is generic
//! over [`ExactInt`]; everything above it is fixed to [`Int`].

pub mod diagram;
pub mod dinv;
pub mod error;
pub mod grs;
pub mod intlat;
pub mod report;
mod scalar;
mod text;

pub use diagram::{definite_goeritz, parse_pd, GoeritzForm, PlanarDiagram};
pub use error::{Error, Result};
pub use grs::{obstruction, KnotInput, ObstructionReport, Verdict};
pub use scalar::ExactInt;
pub use text::{parse_int_lists, parse_matrix};

/// Arbitrary-precision integer used throughout the pipeline.
pub type Int = num_bigint::BigInt;
/// Exact rational used for correction terms and D invariants.
pub type Rational = num_rational::BigRational;
/// Dense matrix over [`Int`].
pub type IntMatrix = intlat::Matrix<Int>;
