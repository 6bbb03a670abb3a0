use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A factor that must be nonzero vanished identically under the bindings.
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    /// A summation kept producing terms at or below the working order.
    #[error("term valuations stopped growing after {terms} terms (invalid parameter binding?)")]
    NonTermination { terms: usize },
    /// A series has no formal meaning (e.g. a Lambert series whose summands do not have positive valuation).
    #[error("formally divergent: {0}")]
    Divergent(String),
    #[error("zero is not a valid q-monomial parameter")]
    ZeroParameter,
    #[error("unknown parameter {0}")]
    UnknownParameter(String),
    #[error("cannot parse `{0}` as a rational or q-monomial")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
