//! Uniform interface over the four structures, used by the differential
//! harness and the benchmark driver.

use std::fmt;
use std::str::FromStr;

use crate::circular::{CircularDeque, LazyCircularQueue};
use crate::error::{InvariantViolation, QueueError};
use crate::linear::{BlankNodeQueue, HeaderQueue};
use crate::store::NodeStore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantId {
    Header,
    Blank,
    Circular,
    Lazy,
}

impl VariantId {
    pub const ALL: [VariantId; 4] = [
        VariantId::Header,
        VariantId::Blank,
        VariantId::Circular,
        VariantId::Lazy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VariantId::Header => "header",
            VariantId::Blank => "blank",
            VariantId::Circular => "circular",
            VariantId::Lazy => "lazy",
        }
    }

    /// Only the circular deque accepts `push_front`.
    pub fn supports_push_front(self) -> bool {
        self == VariantId::Circular
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown variant `{0}` (expected header, blank, circular or lazy)")]
pub struct UnknownVariant(pub String);

impl FromStr for VariantId {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "header" => Ok(VariantId::Header),
            "blank" => Ok(VariantId::Blank),
            "circular" => Ok(VariantId::Circular),
            "lazy" => Ok(VariantId::Lazy),
            other => Err(UnknownVariant(other.to_string())),
        }
    }
}

/// A linked structure driven through deque-shaped operations.
///
/// `push_back` is enqueue for the three queues. `push_front` fails with
/// [`QueueError::Unsupported`] everywhere except [`CircularDeque`].
pub trait LinkedSequence<E: Clone>: Sized {
    const VARIANT: VariantId;

    fn create(store: &mut NodeStore<E>) -> Result<Self, QueueError>;
    fn push_back(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError>;
    fn push_front(&mut self, _store: &mut NodeStore<E>, _item: E) -> Result<(), QueueError> {
        Err(QueueError::Unsupported(Self::VARIANT))
    }
    fn pop_front(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError>;
    fn front<'s>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError>;
    fn is_empty(&self, store: &NodeStore<E>) -> Result<bool, QueueError>;
    fn destroy(self, store: &mut NodeStore<E>) -> Result<(), QueueError>;
    /// Walks the structure, assuming it holds `len` elements.
    fn check_structure(&self, store: &NodeStore<E>, len: usize) -> Result<(), InvariantViolation>;
    /// Nodes the structure owns while holding `len` elements.
    fn expected_live_nodes(&self, len: usize) -> usize {
        len + 1
    }
}

impl<E: Clone> LinkedSequence<E> for HeaderQueue {
    const VARIANT: VariantId = VariantId::Header;

    fn create(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        HeaderQueue::new(store)
    }
    #[inline]
    fn push_back(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        self.enqueue(store, item)
    }
    #[inline]
    fn pop_front(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        self.dequeue(store)
    }
    fn front<'s>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        HeaderQueue::front(self, store)
    }
    fn is_empty(&self, _store: &NodeStore<E>) -> Result<bool, QueueError> {
        Ok(HeaderQueue::is_empty(self))
    }
    fn destroy(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        HeaderQueue::destroy(self, store)
    }
    fn check_structure(&self, store: &NodeStore<E>, len: usize) -> Result<(), InvariantViolation> {
        HeaderQueue::check_structure(self, store, len)
    }
}

impl<E: Clone> LinkedSequence<E> for BlankNodeQueue {
    const VARIANT: VariantId = VariantId::Blank;

    fn create(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        Ok(BlankNodeQueue::new(store))
    }
    #[inline]
    fn push_back(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        self.enqueue(store, item)
    }
    #[inline]
    fn pop_front(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        self.dequeue(store)
    }
    fn front<'s>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        BlankNodeQueue::front(self, store)
    }
    fn is_empty(&self, _store: &NodeStore<E>) -> Result<bool, QueueError> {
        Ok(BlankNodeQueue::is_empty(self))
    }
    fn destroy(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        BlankNodeQueue::destroy(self, store)
    }
    fn check_structure(&self, store: &NodeStore<E>, len: usize) -> Result<(), InvariantViolation> {
        BlankNodeQueue::check_structure(self, store, len)
    }
}

impl<E: Clone> LinkedSequence<E> for CircularDeque {
    const VARIANT: VariantId = VariantId::Circular;

    fn create(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        CircularDeque::new(store)
    }
    #[inline]
    fn push_back(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        CircularDeque::push_back(self, store, item)
    }
    #[inline]
    fn push_front(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        CircularDeque::push_front(self, store, item)
    }
    #[inline]
    fn pop_front(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        CircularDeque::pop_front(self, store)
    }
    fn front<'s>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        CircularDeque::front(self, store)
    }
    fn is_empty(&self, store: &NodeStore<E>) -> Result<bool, QueueError> {
        CircularDeque::is_empty(self, store)
    }
    fn destroy(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        CircularDeque::destroy(self, store)
    }
    fn check_structure(&self, store: &NodeStore<E>, len: usize) -> Result<(), InvariantViolation> {
        CircularDeque::check_structure(self, store, len)
    }
}

impl<E: Clone> LinkedSequence<E> for LazyCircularQueue {
    const VARIANT: VariantId = VariantId::Lazy;

    fn create(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        LazyCircularQueue::new(store)
    }
    #[inline]
    fn push_back(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        self.enqueue(store, item)
    }
    #[inline]
    fn pop_front(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        self.dequeue(store)
    }
    fn front<'s>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        LazyCircularQueue::front(self, store)
    }
    fn is_empty(&self, _store: &NodeStore<E>) -> Result<bool, QueueError> {
        Ok(LazyCircularQueue::is_empty(self))
    }
    fn destroy(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        LazyCircularQueue::destroy(self, store)
    }
    fn check_structure(&self, store: &NodeStore<E>, len: usize) -> Result<(), InvariantViolation> {
        LazyCircularQueue::check_structure(self, store, len)
    }
    fn expected_live_nodes(&self, _len: usize) -> usize {
        self.capacity() + 1
    }
}

/// Calls `$body` with `$ty` bound to the structure type of `$variant`.
#[macro_export]
macro_rules! with_variant {
    ($variant:expr, $ty:ident => $body:expr) => {
        match $variant {
            $crate::VariantId::Header => {
                type $ty = $crate::HeaderQueue;
                $body
            }
            $crate::VariantId::Blank => {
                type $ty = $crate::BlankNodeQueue;
                $body
            }
            $crate::VariantId::Circular => {
                type $ty = $crate::CircularDeque;
                $body
            }
            $crate::VariantId::Lazy => {
                type $ty = $crate::LazyCircularQueue;
                $body
            }
        }
    };
}
