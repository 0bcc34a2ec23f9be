use thiserror::Error;

/// Errors surfaced by the library.
///
/// Contract violations that can only arise from caller bugs (mismatched
/// order lengths, foreign alternative ids) panic instead; everything that
/// can be triggered by data or configuration is reported here.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid alternative set: {0}")]
    InvalidAlternatives(String),

    #[error("invalid never condition: {0}")]
    InvalidCondition(String),

    /// An enumeration would exceed a configured cap (see [`crate::Caps`]).
    #[error("{what} exceeds the {cap} cap of {limit} (requested {requested})")]
    ResourceCap {
        what: &'static str,
        requested: u64,
        cap: &'static str,
        limit: u64,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Returned by operations that are only defined on Condorcet domains.
    #[error("not a Condorcet domain")]
    NotCondorcet,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: u64, cap: &'static str, limit: u64) -> Self {
        Error::ResourceCap {
            what,
            requested,
            cap,
            limit,
        }
    }

    /// The cap name and limit, when this is a resource-cap error.
    pub fn cap_info(&self) -> Option<(&'static str, u64)> {
        match self {
            Error::ResourceCap { cap, limit, .. } => Some((cap, *limit)),
            _ => None,
        }
    }
}
