//! The two linear singly linked queues.
//!
//! [`HeaderQueue`] keeps a header node `H` before the front and a rear handle
//! `R`. Its dequeue must compare the departing node with `R` and reset `R` when
//! the queue drains:
//!
//! ```text
//!   H -> [0] -> [1] -> [2] -> (none)
//!                       R
//! ```
//!
//! [`BlankNodeQueue`] describes the queue as `[left, right)`. The node named by
//! `right` is blank; enqueue fills it and appends a fresh blank node, so the
//! successor of the front always exists and dequeue needs no check:
//!
//! ```text
//!   left -> [0] -> [1] -> [2] -> [ ] <- right
//! ```

use crate::error::{InvariantViolation, QueueError};
use crate::store::{NodeHandle, NodeStore, StoreError};

/// Link value of the rear node of a [`HeaderQueue`].
const NO_SUCCESSOR: NodeHandle = NodeHandle::sentinel();

/// Header-node queue with the rear-reset branch in dequeue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeaderQueue {
    header: NodeHandle,
    rear: NodeHandle,
}

impl HeaderQueue {
    pub fn new<E>(store: &mut NodeStore<E>) -> Result<Self, QueueError> {
        let header = store.allocate();
        store.write_next(header, NO_SUCCESSOR)?;
        Ok(Self {
            header,
            rear: header,
        })
    }

    pub fn header(&self) -> NodeHandle {
        self.header
    }

    pub fn rear(&self) -> NodeHandle {
        self.rear
    }

    pub fn is_empty(&self) -> bool {
        self.rear == self.header
    }

    pub fn enqueue<E>(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        let p = store.allocate();
        store.write_data(p, item)?;
        store.write_next(p, NO_SUCCESSOR)?;
        store.write_next(self.rear, p)?;
        self.rear = p;
        store.note_register_write();
        Ok(())
    }

    pub fn dequeue<E>(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        let front = store.read_next(self.header)?;
        let after = store.read_next(front)?;
        store.write_next(self.header, after)?;
        if store.same_node(front, self.rear) {
            self.rear = self.header;
            store.note_register_write();
        }
        Ok(store.free(front)?.ok_or(StoreError::UnwrittenData(front))?)
    }

    pub fn front<'s, E>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        let front = store.read_next(self.header)?;
        Ok(store.read_data(front)?)
    }

    /// Frees every node including the header.
    pub fn destroy<E>(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        let mut cur = self.header;
        loop {
            let next = store.read_next(cur)?;
            store.free(cur)?;
            if cur == self.rear {
                return Ok(());
            }
            cur = next;
        }
    }

    /// Walks from the header and checks that the rear is reached after exactly
    /// `len` links and that its link is the no-successor value.
    pub fn check_structure<E>(
        &self,
        store: &NodeStore<E>,
        len: usize,
    ) -> Result<(), InvariantViolation> {
        let mut cur = self.header;
        for step in 0..len {
            if cur == self.rear {
                return Err(violation(format!(
                    "header queue reached R after {step} of {len} links"
                )));
            }
            cur = store.read_next(cur)?;
            if !store.has_data(cur)? {
                return Err(violation(format!("element {step} has no data")));
            }
        }
        if cur != self.rear {
            return Err(violation(format!(
                "header queue: node {len} links past H is not R"
            )));
        }
        if store.read_next(self.rear)? != NO_SUCCESSOR {
            return Err(violation("R has a successor".into()));
        }
        if (len == 0) != self.is_empty() {
            return Err(violation("emptiness disagrees with R == H".into()));
        }
        Ok(())
    }
}

/// Linear queue `[left, right)` with a rear blank node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlankNodeQueue {
    left: NodeHandle,
    right: NodeHandle,
}

impl BlankNodeQueue {
    pub fn new<E>(store: &mut NodeStore<E>) -> Self {
        let blank = store.allocate();
        Self {
            left: blank,
            right: blank,
        }
    }

    pub fn left(&self) -> NodeHandle {
        self.left
    }

    pub fn right(&self) -> NodeHandle {
        self.right
    }

    pub fn is_empty(&self) -> bool {
        self.left == self.right
    }

    /// Fills the blank node with `item` and appends a fresh blank node. The
    /// fresh node's link is never written.
    pub fn enqueue<E>(&mut self, store: &mut NodeStore<E>, item: E) -> Result<(), QueueError> {
        store.write_data(self.right, item)?;
        let p = store.allocate();
        store.write_next(self.right, p)?;
        self.right = p;
        store.note_register_write();
        Ok(())
    }

    pub fn dequeue<E>(&mut self, store: &mut NodeStore<E>) -> Result<E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        let p = self.left;
        self.left = store.read_next(p)?;
        store.note_register_write();
        Ok(store.free(p)?.ok_or(StoreError::UnwrittenData(p))?)
    }

    pub fn front<'s, E>(&self, store: &'s NodeStore<E>) -> Result<&'s E, QueueError> {
        if self.is_empty() {
            return Err(QueueError::Empty);
        }
        Ok(store.read_data(self.left)?)
    }

    /// Frees every element node and the blank node.
    pub fn destroy<E>(self, store: &mut NodeStore<E>) -> Result<(), QueueError> {
        let mut cur = self.left;
        while cur != self.right {
            let next = store.read_next(cur)?;
            store.free(cur)?;
            cur = next;
        }
        store.free(self.right)?;
        Ok(())
    }

    /// Checks that `right` is reached from `left` in exactly `len` links, that
    /// every node in between holds data and that the blank node holds none.
    pub fn check_structure<E>(
        &self,
        store: &NodeStore<E>,
        len: usize,
    ) -> Result<(), InvariantViolation> {
        if !store.is_live(self.right) {
            return Err(violation("blank node is not live".into()));
        }
        let mut cur = self.left;
        for step in 0..len {
            if cur == self.right {
                return Err(violation(format!(
                    "blank-node queue reached right after {step} of {len} links"
                )));
            }
            if !store.has_data(cur)? {
                return Err(violation(format!("element {step} has no data")));
            }
            cur = store.read_next(cur)?;
        }
        if cur != self.right {
            return Err(violation(format!(
                "blank-node queue: node {len} links past left is not right"
            )));
        }
        if store.has_data(self.right)? {
            return Err(violation("blank node holds data".into()));
        }
        Ok(())
    }
}

fn violation(msg: String) -> InvariantViolation {
    InvariantViolation(msg)
}
