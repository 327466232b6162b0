use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid domain [{a}, {b}]: need a < b")]
    InvalidDomain { a: f64, b: f64 },

    #[error("grid step must be positive and finite, got {h}")]
    InvalidStep { h: f64 },

    #[error("(b - a)/h = {ratio} is not an integer (residual {residual:e})")]
    NonDivisibleStep { ratio: f64, residual: f64 },

    #[error("grid has P = {p} intervals; at least 3 are required")]
    TooFewIntervals { p: usize },

    #[error("refinement factor r = {r} must be even and at least 2")]
    InvalidRefinement { r: usize },

    #[error("subnode index m = {m} outside 0..={r}")]
    SubnodeOutOfRange { m: usize, r: usize },

    #[error("advection speed must be nonzero")]
    ZeroAdvectionSpeed,

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("non-finite value {value} at node {node}")]
    NonFiniteInput { node: usize, value: f64 },

    #[error("solution became non-finite at step {step}, node {node} (unstable configuration?)")]
    Unstable { step: usize, node: usize },

    #[error("boundary value {which} = {boundary} does not match the initial data {initial} (tolerance 1e-9)")]
    IncompatibleBoundary {
        which: &'static str,
        boundary: f64,
        initial: f64,
    },

    #[error("3^{m} overflows f64; the bound is vacuous at this scale, use fewer fine steps")]
    PowerOverflow { m: usize },

    #[error("interval endpoints must satisfy p2 > p1 (got p1 = {p1}, p2 = {p2})")]
    DegenerateInterval { p1: f64, p2: f64 },

    #[error("coarse/fine mismatch: {0}")]
    GridMismatch(String),

    #[error("lemma inputs must be positive, entry {index} is {value}")]
    NonPositive { index: usize, value: f64 },

    #[error("configuration field `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, reason: impl ToString) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.to_string(),
        }
    }
}
