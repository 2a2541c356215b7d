use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function}: argument {value} outside domain ({requirement})")]
    Domain {
        function: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{0}: intermediate value overflows")]
    Overflow(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("integrand returned a non-finite value at {at}")]
    NonFinite { at: f64 },

    #[error("rule {rule} not applicable: {predicate}")]
    NotApplicable { rule: String, predicate: String },

    #[error("rule {rule} requires mu > {mu_min}, got {mu}")]
    BelowConvergenceFloor { rule: String, mu: f64, mu_min: f64 },

    #[error("integral diverges: {0}")]
    Divergent(String),

    #[error("unknown rule {0}")]
    UnknownRule(String),
}

pub type Result<T> = std::result::Result<T, Error>;
