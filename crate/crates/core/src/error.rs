use thiserror::Error;

use crate::Gap;

/// Errors produced by the gap-set operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in `{input}`: {reason}")]
    Syntax { input: String, reason: String },

    #[error("gap set list is not strictly increasing")]
    NotIncreasing,

    #[error("period entries and non-leading differences must be positive")]
    ZeroPeriodEntry,

    #[error("gap set is empty")]
    EmptySet,

    #[error("requested {requested} but the sampled prefix only determines values up to {available}")]
    HorizonExceeded { requested: Gap, available: Gap },

    #[error("undecidable for a sampled gap set: {0}")]
    Undecidable(&'static str),

    #[error("gap set is not sofic (no eventually periodic representation)")]
    NotSofic,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value is rational, not a quadratic irrational")]
    NotIrrational,

    #[error("1/{n} is excluded; conjugate representative is S = {{{n}, {}, ...}} ({hint})", n + 1)]
    ExcludedPoint { n: Gap, hint: String },

    #[error("perturbed gap set is mixing (gcd 1)")]
    PerturbationMixing,

    #[error("word `{0}` is not admissible in the source shift")]
    NonAdmissible(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "Syntax",
            Error::NotIncreasing => "NotIncreasing",
            Error::ZeroPeriodEntry => "ZeroPeriodEntry",
            Error::EmptySet => "EmptySet",
            Error::HorizonExceeded { .. } => "HorizonExceeded",
            Error::Undecidable(_) => "Undecidable",
            Error::NotSofic => "NotSofic",
            Error::Precondition(_) => "Precondition",
            Error::NotStronglyConnected => "NotStronglyConnected",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::NotIrrational => "NotIrrational",
            Error::ExcludedPoint { .. } => "ExcludedPoint",
            Error::PerturbationMixing => "PerturbationMixing",
            Error::NonAdmissible(_) => "NonAdmissible",
            Error::Overflow => "Overflow",
        }
    }

    pub(crate) fn syntax(input: &str, reason: impl Into<String>) -> Self {
        Error::Syntax {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
