//! Instrumented node arena.
//!
//! Every list node of every structure in this crate lives in a [`NodeStore`].
//! Nodes are named by [`NodeHandle`]s, which carry the slot index plus the
//! allocation generation of that slot. Freeing a node bumps the generation, so
//! in [`Mode::Checked`] any later access through the old handle is reported as
//! [`StoreError::StaleHandle`] instead of silently reading whatever the slot
//! holds now.
//!
//! The store counts the structural events that the queue variants perform:
//!
//! ```text
//!   allocations      allocate()
//!   deallocations    free()
//!   data_writes      write_data()
//!   link_writes      write_next()
//!   register_writes  note_register_write()   (left, right, H, R, ...)
//!   comparisons      note_comparison() / same_node()
//! ```
//!
//! Reads are never counted. A fresh node has neither data nor link; reading
//! either before it is written is an error in both modes, so the store never
//! fabricates a value.

use std::fmt;
use std::ops::Sub;

use thiserror::Error;

/// Opaque identity of one node inside a [`NodeStore`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeHandle {
    index: u32,
    generation: u32,
}

impl NodeHandle {
    /// A value that never names a node. Only the header queue uses it, as its
    /// "no successor" link.
    pub(crate) const fn sentinel() -> Self {
        Self {
            index: u32::MAX,
            generation: u32::MAX,
        }
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn generation(self) -> u32 {
        self.generation
    }
}

impl fmt::Debug for NodeHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::sentinel() {
            f.write_str("NodeHandle(sentinel)")
        } else {
            write!(f, "NodeHandle({}v{})", self.index, self.generation)
        }
    }
}

/// Access checking policy of a store.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Every access validates the handle generation.
    Checked,
    /// Accesses only check that the slot index exists.
    #[default]
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StoreError {
    #[error("{0:?} does not name a node of this store")]
    InvalidHandle(NodeHandle),
    #[error("{0:?} refers to a freed node")]
    StaleHandle(NodeHandle),
    #[error("data slot of {0:?} read before it was written")]
    UnwrittenData(NodeHandle),
    #[error("link of {0:?} read before it was written")]
    UnwrittenLink(NodeHandle),
}

/// Event counters of a store.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Metrics {
    pub allocations: u64,
    pub deallocations: u64,
    pub data_writes: u64,
    pub link_writes: u64,
    pub register_writes: u64,
    pub comparisons: u64,
}

impl Metrics {
    pub const ZERO: Metrics = Metrics {
        allocations: 0,
        deallocations: 0,
        data_writes: 0,
        link_writes: 0,
        register_writes: 0,
        comparisons: 0,
    };

    /// Sum of all six counters.
    pub fn total(&self) -> u64 {
        self.allocations
            + self.deallocations
            + self.data_writes
            + self.link_writes
            + self.register_writes
            + self.comparisons
    }
}

impl Sub for Metrics {
    type Output = Metrics;

    /// Per-counter difference; `self` must be the later snapshot.
    fn sub(self, earlier: Metrics) -> Metrics {
        Metrics {
            allocations: self.allocations - earlier.allocations,
            deallocations: self.deallocations - earlier.deallocations,
            data_writes: self.data_writes - earlier.data_writes,
            link_writes: self.link_writes - earlier.link_writes,
            register_writes: self.register_writes - earlier.register_writes,
            comparisons: self.comparisons - earlier.comparisons,
        }
    }
}

#[derive(Debug)]
struct Slot<E> {
    generation: u32,
    live: bool,
    data: Option<E>,
    next: Option<NodeHandle>,
}

/// Arena owning list nodes, with event counters.
#[derive(Debug)]
pub struct NodeStore<E> {
    slots: Vec<Slot<E>>,
    free_slots: Vec<u32>,
    live: usize,
    peak_live: usize,
    metrics: Metrics,
    mode: Mode,
}

impl<E> Default for NodeStore<E> {
    fn default() -> Self {
        Self::new(Mode::default())
    }
}

impl<E> NodeStore<E> {
    pub fn new(mode: Mode) -> Self {
        Self {
            slots: Vec::new(),
            free_slots: Vec::new(),
            live: 0,
            peak_live: 0,
            metrics: Metrics::ZERO,
            mode,
        }
    }

    pub fn checked() -> Self {
        Self::new(Mode::Checked)
    }

    pub fn fast() -> Self {
        Self::new(Mode::Fast)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of allocated, not yet freed nodes.
    pub fn live_count(&self) -> usize {
        self.live
    }

    /// Highest live count observed since construction or the last
    /// [`reset_metrics`](Self::reset_metrics).
    pub fn peak_live(&self) -> usize {
        self.peak_live
    }

    /// Allocates a node whose data and link are both unwritten.
    pub fn allocate(&mut self) -> NodeHandle {
        self.metrics.allocations += 1;
        self.live += 1;
        self.peak_live = self.peak_live.max(self.live);

        if let Some(index) = self.free_slots.pop() {
            let slot = &mut self.slots[index as usize];
            slot.live = true;
            return NodeHandle {
                index,
                generation: slot.generation,
            };
        }

        let index = u32::try_from(self.slots.len())
            .ok()
            .filter(|&i| i != u32::MAX)
            .expect("node store exhausted its index space");
        self.slots.push(Slot {
            generation: 0,
            live: true,
            data: None,
            next: None,
        });
        NodeHandle {
            index,
            generation: 0,
        }
    }

    /// Allocates a node and writes `value` into it (one allocation, one data
    /// write).
    pub fn allocate_with(&mut self, value: E) -> NodeHandle {
        let h = self.allocate();
        let slot = &mut self.slots[h.index()];
        slot.data = Some(value);
        self.metrics.data_writes += 1;
        h
    }

    /// Frees a live node and hands back whatever its data slot held.
    ///
    /// Freeing an already freed node is an error in both modes; the free list
    /// would otherwise hand out the same slot twice.
    pub fn free(&mut self, h: NodeHandle) -> Result<Option<E>, StoreError> {
        let slot = self
            .slots
            .get_mut(h.index())
            .ok_or(StoreError::InvalidHandle(h))?;
        if !slot.live || slot.generation != h.generation {
            return Err(StoreError::StaleHandle(h));
        }
        slot.live = false;
        slot.next = None;
        let data = slot.data.take();
        // A slot whose generation would wrap is retired so that stale handles
        // can never alias a later allocation.
        if let Some(generation) = slot.generation.checked_add(1) {
            slot.generation = generation;
            self.free_slots.push(h.index);
        }
        self.live -= 1;
        self.metrics.deallocations += 1;
        Ok(data)
    }

    #[inline]
    fn slot(&self, h: NodeHandle) -> Result<&Slot<E>, StoreError> {
        let slot = self
            .slots
            .get(h.index())
            .ok_or(StoreError::InvalidHandle(h))?;
        if self.mode == Mode::Checked && (!slot.live || slot.generation != h.generation) {
            return Err(StoreError::StaleHandle(h));
        }
        Ok(slot)
    }

    #[inline]
    fn slot_mut(&mut self, h: NodeHandle) -> Result<&mut Slot<E>, StoreError> {
        let checked = self.mode == Mode::Checked;
        let slot = self
            .slots
            .get_mut(h.index())
            .ok_or(StoreError::InvalidHandle(h))?;
        if checked && (!slot.live || slot.generation != h.generation) {
            return Err(StoreError::StaleHandle(h));
        }
        Ok(slot)
    }

    /// The successor of `h`.
    #[inline]
    pub fn read_next(&self, h: NodeHandle) -> Result<NodeHandle, StoreError> {
        self.slot(h)?.next.ok_or(StoreError::UnwrittenLink(h))
    }

    #[inline]
    pub fn write_next(&mut self, h: NodeHandle, next: NodeHandle) -> Result<(), StoreError> {
        self.slot_mut(h)?.next = Some(next);
        self.metrics.link_writes += 1;
        Ok(())
    }

    #[inline]
    pub fn read_data(&self, h: NodeHandle) -> Result<&E, StoreError> {
        self.slot(h)?
            .data
            .as_ref()
            .ok_or(StoreError::UnwrittenData(h))
    }

    #[inline]
    pub fn write_data(&mut self, h: NodeHandle, value: E) -> Result<(), StoreError> {
        self.slot_mut(h)?.data = Some(value);
        self.metrics.data_writes += 1;
        Ok(())
    }

    /// Whether the data slot of `h` has been written. Uncounted.
    pub fn has_data(&self, h: NodeHandle) -> Result<bool, StoreError> {
        Ok(self.slot(h)?.data.is_some())
    }

    /// Whether `h` names a live node, regardless of mode.
    pub fn is_live(&self, h: NodeHandle) -> bool {
        self.slots
            .get(h.index())
            .is_some_and(|s| s.live && s.generation == h.generation)
    }

    /// Records a write to a structure-level handle (front, rear, header...).
    #[inline]
    pub fn note_register_write(&mut self) {
        self.metrics.register_writes += 1;
    }

    /// Records one node-identity comparison.
    #[inline]
    pub fn note_comparison(&mut self) {
        self.metrics.comparisons += 1;
    }

    /// Compares two handles and records the comparison.
    #[inline]
    pub fn same_node(&mut self, a: NodeHandle, b: NodeHandle) -> bool {
        self.note_comparison();
        a == b
    }

    pub fn snapshot(&self) -> Metrics {
        self.metrics
    }

    /// Zeroes the counters and restarts peak tracking from the current live
    /// count. Nodes are untouched.
    pub fn reset_metrics(&mut self) {
        self.metrics = Metrics::ZERO;
        self.peak_live = self.live;
    }
}
