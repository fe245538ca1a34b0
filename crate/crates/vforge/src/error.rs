//! Crate-wide error type.

use crate::rat::Rat;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A profile or pattern level fell outside the unit interval.
    #[error("level {0} outside [0,1]")]
    LevelOutOfRange(Rat),

    /// An interval or interval union failed its structural invariants.
    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    /// A point fell outside the declared domain of a construction.
    #[error("point {point} outside domain {domain}")]
    Domain { point: Rat, domain: String },

    /// A connector was applied outside its domain (the equiconnected
    /// subset squared, plus the diagonal).
    #[error("connector domain violation: {0}")]
    LambdaDomain(String),

    /// A fan point is neither on an integer-slope line through the
    /// origin nor one of the two apex points.
    #[error("not in carrier: {0}")]
    NotInCarrier(String),

    /// Gauge thresholds supplied in the wrong order (beta must be
    /// strictly below alpha).
    #[error("threshold order violated: beta {beta} >= alpha {alpha}")]
    ThresholdOrder { alpha: Rat, beta: Rat },

    /// A point handed to the gluing identity check lies outside the
    /// requested band between closed stages.
    #[error("point not in stage band for n = {n}")]
    RegionMismatch { n: u128 },

    /// Evaluation hit the stage-scan cutoff without resolving which
    /// band the point lies in. Never a wrong value: the caller learns
    /// the probe was too deep for the configured depth.
    #[error("undecided at depth {depth}")]
    Undecided { depth: u128 },

    /// A generated approach sequence left the required closed band.
    #[error("sequence point {n} outside its closed band")]
    SequenceOutOfRegion { n: u128 },

    /// Unknown construction or connector name.
    #[error("unknown construction: {0}")]
    UnknownConstruction(String),

    /// A stage index or run length exceeded the supported range.
    #[error("index overflow: {0}")]
    IndexOverflow(String),

    /// Malformed textual input (rationals, ranges, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
