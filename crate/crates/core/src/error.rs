use thiserror::Error;

use crate::arith::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("sides {sides:?} do not form a valid {shape}")]
    InvalidShape {
        shape: &'static str,
        sides: Vec<Rational>,
    },

    #[error("degenerate triangle (zero area)")]
    DegenerateTriangle,

    #[error("parameter {name} must be nonzero")]
    ZeroParameter { name: &'static str },

    /// The parameters produce a length that is zero or negative.
    #[error("parameters rejected: {name} = {value} is not positive")]
    NonPositiveLength { name: String, value: Rational },

    #[error("parameters rejected: sides have mixed signs {sides:?}")]
    MixedSigns { sides: Vec<Rational> },

    /// The denominator of the hexagon's linear split vanishes.
    #[error("linear split is degenerate: denominator of v1, v2 vanishes at m = {m}, u1 = {u1}, u2 = {u2}")]
    DegenerateSplit {
        m: Rational,
        u1: Rational,
        u2: Rational,
    },

    #[error("{what} is irrational")]
    Irrational { what: String },

    #[error("circumradius mismatch: {left} != {right}")]
    CircumradiusMismatch { left: Rational, right: Rational },

    #[error("shared chord mismatch: {left} != {right}")]
    SharedLengthMismatch { left: Rational, right: Rational },

    /// The two root sets share no positive rational value.
    #[error("no common rational root for {what}")]
    NoCommonRoot { what: String },

    #[error("ambiguous common root for {what}: candidates {candidates:?}")]
    AmbiguousRoot {
        what: String,
        candidates: Vec<Rational>,
    },

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    /// A cross-check between two independent computations failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("exact embedding unavailable: {0}")]
    EmbeddingInapplicable(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Parse(_) => "parse",
            Error::InvalidShape { .. } => "invalid_shape",
            Error::DegenerateTriangle => "degenerate_triangle",
            Error::ZeroParameter { .. } => "zero_parameter",
            Error::NonPositiveLength { .. } => "non_positive_length",
            Error::MixedSigns { .. } => "mixed_signs",
            Error::DegenerateSplit { .. } => "degenerate_split",
            Error::Irrational { .. } => "irrational",
            Error::CircumradiusMismatch { .. } => "circumradius_mismatch",
            Error::SharedLengthMismatch { .. } => "shared_length_mismatch",
            Error::NoCommonRoot { .. } => "no_common_root",
            Error::AmbiguousRoot { .. } => "ambiguous_root",
            Error::DegeneratePolygon(_) => "degenerate_polygon",
            Error::Invariant(_) => "invariant",
            Error::Schema(_) => "schema",
            Error::EmbeddingInapplicable(_) => "embedding_inapplicable",
        }
    }

    /// True for the ways a juxtaposition fails because some chord across
    /// the seam is not rational.
    pub fn is_irrational_diagonal(&self) -> bool {
        matches!(self, Error::Irrational { .. } | Error::NoCommonRoot { .. })
    }
}
