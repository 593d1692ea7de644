use thiserror::Error;

/// Errors raised by graph operations, finders, constructions and the exact engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no witness found: {0}")]
    NoWitness(String),

    #[error("no accepted sample after {samples} draws")]
    SamplesExhausted { samples: u64 },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    /// The work budget ran out. `lower_bound` is the best proven lower bound
    /// on the quantity being computed; the upper end of the bracket is open.
    #[error("work budget exceeded after {spent} units ({reason}); value lies in [{lower_bound}, inf)")]
    BudgetExceeded {
        spent: u64,
        lower_bound: usize,
        reason: String,
    },

    #[error("graph order {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
