//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not star-shaped: fan triangle {index} has negative orientation")]
    StarViolation { index: usize },

    #[error("invalid cutter: {0}")]
    InvalidCutter(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("missing column `{0}`")]
    MissingColumn(String),

    #[error("row {row}: non-positive weight {value}")]
    NonPositiveWeight { row: usize, value: f64 },

    #[error("row {row}: non-positive radius {value}")]
    NonPositiveRadius { row: usize, value: f64 },

    #[error("row {row}: {msg}")]
    BadRow { row: usize, msg: String },

    #[error("too few measures: need {needed}, found {found}")]
    TooFewMeasures { needed: usize, found: usize },

    #[error("expected exactly {expected} measures, found {found}")]
    WrongMeasureCount { expected: usize, found: usize },

    #[error("no bracket for bisecting scale after {0} doublings")]
    NoBracket(usize),

    #[error("chart point outside domain: |v| = {0}")]
    ChartDomain(f64),

    #[error("operation requires a star-shaped cutter")]
    NotStarShaped,

    #[error("ambiguous winding: |F| below floor near t = {t}")]
    AmbiguousWinding { t: f64 },

    #[error("no zero found: every box at max depth has winding 0")]
    NoZeroFound {
        /// Boxes surviving to max depth with their boundary windings.
        winding_map: Vec<crate::zerofind::WindingCell>,
    },

    #[error("parity check inconclusive: residual vanishes on a probe loop")]
    Inconclusive,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
