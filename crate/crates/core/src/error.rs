use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation point {point} is a pole")]
    Pole { point: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown symbol `{symbol}` at position {pos}")]
    UnknownSymbol { symbol: String, pos: usize },

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
