use thiserror::Error;

/// Errors produced by the enumeration-backed operations.
///
/// Contract violations (out-of-range indices, malformed constructor input
/// caught by `new`) are reported through `Invalid`; exceeding an enumeration
/// guard is a resource refusal, not a bug, and carries the limit that was hit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: input size {size} exceeds enumeration guard {limit} (set VINC_SIZE_GUARD to override)")]
    SizeGuard {
        op: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("size mismatch: {context}")]
    SizeMismatch { context: String },
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            detail: detail.into(),
        }
    }
}
