use thiserror::Error;

use crate::algebra::Slot;

/// Errors raised by the library.
///
/// [`Error::is_usage`] separates malformed input (bad files, bad arguments)
/// from domain failures (an input that parses but is not a valid tribracket,
/// a non-entropic coloring target, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} out of range for order {order}")]
    OutOfRange { element: usize, order: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not a quasigroup line: {slot} slot, fixed arguments ({}, {}), value {}",
        .fixed.0 + 1, .fixed.1 + 1, .target + 1)]
    NotQuasigroupLine {
        slot: Slot,
        fixed: (usize, usize),
        target: usize,
    },

    #[error("{param} = {value} is not a unit mod {modulus}")]
    NonUnit {
        param: &'static str,
        value: i64,
        modulus: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid tribracket: {0}")]
    InvalidTable(String),

    #[error(
        "tribracket is not entropic (witness {}); \
         the pointwise bracket of homomorphisms need not be a homomorphism",
        one_based(.witness)
    )]
    NotEntropic { witness: [usize; 9] },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("order {order} exceeds the canonical-form bound {bound}; raise the bound to proceed")]
    OrderAboveBound { order: usize, bound: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Pd(#[from] PdError),

    #[error("malformed embedding: {0}")]
    MalformedEmbedding(String),

    #[error("convention table has no entry for {0} crossings")]
    MissingConvention(&'static str),
}

impl Error {
    /// True for errors caused by malformed input rather than by the
    /// mathematics of a well-formed input.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::OutOfRange { .. } | Error::Shape(_) | Error::Parse { .. } | Error::Pd(_)
        )
    }
}

/// PD-code parse errors, each carrying the record/crossing location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdError {
    #[error("empty input")]
    Empty,

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("diagram {name}: edge {edge} multiplicity {count}")]
    Multiplicity {
        name: String,
        edge: usize,
        count: usize,
    },

    #[error("diagram {name}: edge label {edge} outside 1..={max}")]
    LabelRange {
        name: String,
        edge: usize,
        max: usize,
    },

    #[error("diagram {name}: component labels are not consecutive ({detail})")]
    NonConsecutive { name: String, detail: String },

    #[error("diagram {name}: crossing {crossing} has an inconsistent strand orientation")]
    Orientation { name: String, crossing: usize },

    #[error("diagram {name}: diagram is disconnected (crossing {crossing} unreachable from crossing 1)")]
    Disconnected { name: String, crossing: usize },
}

fn one_based(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

pub type Result<T> = std::result::Result<T, Error>;
