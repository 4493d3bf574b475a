//! Exact construction of cyclic pentagons and hexagons whose sides,
//! diagonals, circumradius and area are all rational.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: rationals, rational polynomials, exact square and polynomial roots.
//! - [`geometry`]: Heron, Brahmagupta, circumradius formulas and Ptolemy's identity.
//! - [`param`]: Euler's rational triangles and Sastry's rational cyclic quadrilaterals.
//! - [`pentagon`], [`hexagon`]: closed-form constructions built from those pieces.
//! - [`assembly`]: generic juxtaposition along a shared chord, the common-root
//!   method for unknown diagonals, the exact circle-embedding oracle,
//!   verification reports and integer scaling.
//! - [`catalog`]: JSON documents, parameter sweeps and SVG rendering.

// Errors carry the offending exact values, which makes them larger than
// clippy's default threshold; they are only built on failure paths.
#![allow(clippy::result_large_err)]

pub mod arith;
pub mod assembly;
pub mod catalog;
pub mod error;
pub mod geometry;
pub mod hexagon;
pub mod param;
pub mod pentagon;

pub use arith::{Rational, RationalPolynomial};
pub use assembly::{CyclicPolygon, VerificationReport};
pub use error::{Error, Result};
