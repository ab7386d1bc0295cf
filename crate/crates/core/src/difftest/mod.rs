//! Differential testing of the linked structures against [`OracleDeque`].

mod gen;
mod run;
mod trace;

use std::collections::VecDeque;

pub use gen::{exhaustive_traces, gen_alternating, gen_burst, gen_ramp, gen_random, Mix, MixError};
pub use run::{
    apply_op, diff_check, diff_check_with, oracle_outcome, run_trace, run_trace_on, DiffReport,
    Observation, RunError, TraceOutcome,
};
pub use trace::{format_trace, parse_trace, Op, OpTrace, ParseError};

/// Reference double-ended sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleDeque<E> {
    items: VecDeque<E>,
}

impl<E> OracleDeque<E> {
    pub fn new() -> Self {
        Self {
            items: VecDeque::new(),
        }
    }

    pub fn push_back(&mut self, item: E) {
        self.items.push_back(item);
    }

    pub fn push_front(&mut self, item: E) {
        self.items.push_front(item);
    }

    pub fn pop_front(&mut self) -> Option<E> {
        self.items.pop_front()
    }

    pub fn front(&self) -> Option<&E> {
        self.items.front()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }
}
