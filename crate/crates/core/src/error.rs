use thiserror::Error;

use crate::store::StoreError;
use crate::variant::VariantId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QueueError {
    /// `dequeue`, `pop_front` or `front` called on an empty structure.
    #[error("operation requires a non-empty structure")]
    Empty,
    #[error("{0} does not support push_front")]
    Unsupported(VariantId),
    #[error(transparent)]
    Store(#[from] StoreError),
}

/// A structural invariant found broken by a `check_structure` walk.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant violated: {0}")]
pub struct InvariantViolation(pub String);

impl From<StoreError> for InvariantViolation {
    fn from(e: StoreError) -> Self {
        InvariantViolation(e.to_string())
    }
}
