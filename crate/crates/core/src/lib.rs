//! Singly linked queues built on an instrumented node arena.
//!
//! Four structures share one [`NodeStore`]:
//!
//! - [`HeaderQueue`]: the classic header-node queue, whose dequeue has to
//!   check whether it just removed the rear.
//! - [`BlankNodeQueue`]: the queue as the half-open interval `[left, right)`
//!   where `right` is a blank node that never holds an element. Dequeue is a
//!   handle advance plus a free, with no comparison at all.
//! - [`CircularDeque`]: the same blank node on a cycle, addressed by `right`
//!   alone. Supports `push_back`, `push_front` and `pop_front`, i.e. an
//!   output-restricted deque covering both queue and stack.
//! - [`LazyCircularQueue`]: a cycle that never frees dequeued nodes and grows
//!   only when full.
//!
//! The store counts allocations, frees, data writes, link writes, handle
//! writes and node comparisons, so the per-operation step profile of each
//! structure can be asserted exactly. [`difftest`] checks all four against a
//! reference deque.

pub mod circular;
pub mod difftest;
mod error;
pub mod linear;
pub mod store;
pub mod variant;

pub use circular::{CircularDeque, LazyCircularQueue};
pub use error::{InvariantViolation, QueueError};
pub use linear::{BlankNodeQueue, HeaderQueue};
pub use store::{Metrics, Mode, NodeHandle, NodeStore, StoreError};
pub use variant::{LinkedSequence, VariantId};
