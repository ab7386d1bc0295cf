//! Circularly linked structures.
//!
//! [`CircularDeque`] needs only the blank node `right`; the elements are the
//! interval `[right.next, right)` around the cycle. Inserting after `right`
//! is a stack push, filling `right` and adding a fresh blank node behind it is
//! a queue enqueue, and unsplicing `right.next` serves as both dequeue and
//! pop:
//!
//! ```text
//!   +-> [0] -> [1] -> [2] -> [ ] -+
//!   |                         right
//!   +-----------------------------+
//! ```
//!
//! [`LazyCircularQueue`] keeps both `left` and `right` on the cycle and never
//! frees a node. Dequeue just advances `left`; enqueue reuses the node after
//! `right` unless that node is `left`, in which case the cycle grows by one.

use crate::error::{InvariantViolation, QueueError};
use crate::store::{NodeHandle, NodeStore, StoreError};

/// Output-restricted deque on a circular list.
///
/// As a queue the blank node acts as a footer, as a stack it acts as a header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularDeque {
    right: NodeHandle,
}

/// [`CircularDeque`] used through `push_back` / `pop_front` only.
pub type CircularQueue = CircularDeque;
/// [`CircularDeque`] used through `push_front` / `pop_front` only.
pub type CircularStack = CircularDeque;

impl CircularDeque {
    pub fn new<E>(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        let right = store.allocate();
        store.write_next(right, right)?;
        Ok(Self { right })
    }

    pub fn right(&self) -> NodeHandle {
        self.right
    }

    /// Tests for the self-loop of the empty cycle. Uncounted.
    pub fn is_empty<E>(&self, store: &NodeStore<E>) -> Result<bool, QueueError> {
        Ok(store.read_next(self.right)? == self.right)
    }

    /// Queue enqueue: fill the blank node, splice a fresh blank node after it.
    pub fn push_back<E>(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        store.write_data(self.right, item)?;
        let p = store.allocate();
        store.write_next(p, store.read_next(self.right)?)?;
        store.write_next(self.right, p)?;
        self.right = p;
        store.note_register_write();
        Ok(())
    }

    /// Stack push: splice a new element node right after the blank node.
    pub fn push_front<E>(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        let p = store.allocate();
        store.write_data(p, item)?;
        store.write_next(p, store.read_next(self.right)?)?;
        store.write_next(self.right, p)?;
        Ok(())
    }

    /// Queue dequeue and stack pop. `right` never moves: its successor is
    /// `right` itself only when empty.
    pub fn pop_front<E>(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        let left = store.read_next(self.right)?;
        if left == self.right {
            return Err(QueueError::Empty);
        }
        store.write_next(self.right, store.read_next(left)?)?;
        Ok(store.free(left)?.ok_or(StoreError::UnwrittenData(left))?)
    }

    pub fn front<'s, E>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        let left = store.read_next(self.right)?;
        if left == self.right {
            return Err(QueueError::Empty);
        }
        Ok(store.read_data(left)?)
    }

    pub fn destroy<E>(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        free_cycle(store, self.right)
    }

    /// Walks the cycle from `right.next` and checks that `right` comes back
    /// after exactly `len` element nodes.
    pub fn check_structure<E>(
        &self,
        store: &NodeStore<E>,
        len: usize,
    ) -> Result<(), InvariantViolation> {
        let mut cur = store.read_next(self.right)?;
        for step in 0..len {
            if cur == self.right {
                return Err(InvariantViolation(format!(
                    "circular deque closed after {step} of {len} elements"
                )));
            }
            if !store.has_data(cur)? {
                return Err(InvariantViolation(format!("element {step} has no data")));
            }
            cur = store.read_next(cur)?;
        }
        if cur != self.right {
            return Err(InvariantViolation(format!(
                "circular deque: cycle longer than {len} elements plus blank node"
            )));
        }
        if store.has_data(self.right)? {
            return Err(InvariantViolation("blank node holds data".into()));
        }
        Ok(())
    }
}

/// Circular queue that keeps dequeued nodes for reuse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazyCircularQueue {
    left: NodeHandle,
    right: NodeHandle,
    capacity: usize,
}

impl LazyCircularQueue {
    pub fn new<E>(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        let seed = store.allocate();
        store.write_next(seed, seed)?;
        Ok(Self {
            left: seed,
            right: seed,
            capacity: 0,
        })
    }

    pub fn left(&self) -> NodeHandle {
        self.left
    }

    pub fn right(&self) -> NodeHandle {
        self.right
    }

    /// Number of element-capable nodes: cycle length minus one.
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn is_empty(&self) -> bool {
        self.left == self.right
    }

    /// Writes `item` into `right`, then either grows the cycle (when the node
    /// after `right` is `left`) or advances `right` onto the next spare node.
    /// The fullness test is counted on every call.
    pub fn enqueue<E>(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        store.write_data(self.right, item)?;
        let next = store.read_next(self.right)?;
        if store.same_node(next, self.left) {
            let p = store.allocate();
            store.write_next(p, self.left)?;
            store.write_next(self.right, p)?;
            self.right = p;
            self.capacity += 1;
        } else {
            self.right = next;
        }
        store.note_register_write();
        Ok(())
    }

    /// Advances `left`. The element stays in its node until overwritten.
    pub fn dequeue<E: Clone>(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        let item = store.read_data(self.left)?.clone();
        self.left = store.read_next(self.left)?;
        store.note_register_write();
        Ok(item)
    }

    pub fn front<'s, E>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        Ok(store.read_data(self.left)?)
    }

    pub fn destroy<E>(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        free_cycle(store, self.right)
    }

    /// Cycle length minus one, computed by walking.
    pub fn walk_capacity<E>(&self, store: &NodeStore<E>) -> Result<usize, StoreError> {
        let mut cur = store.read_next(self.right)?;
        let mut n = 0;
        while cur != self.right {
            n += 1;
            cur = store.read_next(cur)?;
        }
        Ok(n)
    }

    /// Checks `[left, right)` spans `len` nodes, `len <= capacity`, and the
    /// walked cycle length agrees with the tracked capacity.
    pub fn check_structure<E>(
        &self,
        store: &NodeStore<E>,
        len: usize,
    ) -> Result<(), InvariantViolation> {
        if len > self.capacity {
            return Err(InvariantViolation(format!(
                "lazy queue holds {len} elements but capacity is {}",
                self.capacity
            )));
        }
        let mut cur = self.left;
        for step in 0..len {
            if cur == self.right {
                return Err(InvariantViolation(format!(
                    "lazy queue reached right after {step} of {len} links"
                )));
            }
            if !store.has_data(cur)? {
                return Err(InvariantViolation(format!("element {step} has no data")));
            }
            cur = store.read_next(cur)?;
        }
        if cur != self.right {
            return Err(InvariantViolation(format!(
                "lazy queue: node {len} links past left is not right"
            )));
        }
        let walked = self.walk_capacity(store)?;
        if walked != self.capacity {
            return Err(InvariantViolation(format!(
                "lazy queue: tracked capacity {} but cycle holds {} spare nodes",
                self.capacity, walked
            )));
        }
        Ok(())
    }
}

fn free_cycle<E>(store: &mut NodeStore<E>, start: NodeHandle) -> Result<(), QueueError> {
    let mut cur = store.read_next(start)?;
    while cur != start {
        let next = store.read_next(cur)?;
        store.free(cur)?;
        cur = next;
    }
    store.free(start)?;
    Ok(())
}
