//! Operation traces and their line-oriented text form.
//!
//! ```text
//! # comment
//! B 17      push_back 17
//! F -3      push_front -3
//! P         pop_front
//! Q         front query
//! E         is_empty query
//! ```
//!
//! ASCII only, LF line endings. Blank lines are ignored. The comment lines
//! `# generator: <name>` and `# seed: <u64>` are read back as metadata.

use std::fmt::{self, Write as _};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    PushBack(i64),
    PushFront(i64),
    PopFront,
    Front,
    IsEmpty,
}

impl Op {
    pub fn is_push(self) -> bool {
        matches!(self, Op::PushBack(_) | Op::PushFront(_))
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::PushBack(v) => write!(f, "B {v}"),
            Op::PushFront(v) => write!(f, "F {v}"),
            Op::PopFront => f.write_str("P"),
            Op::Front => f.write_str("Q"),
            Op::IsEmpty => f.write_str("E"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpTrace {
    pub ops: Vec<Op>,
    pub seed: Option<u64>,
    pub generator: String,
}

impl OpTrace {
    pub fn new(generator: impl Into<String>, ops: Vec<Op>) -> Self {
        Self {
            ops,
            seed: None,
            generator: generator.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Queue-only variants accept a trace iff it has no `PushFront`.
    pub fn is_queue_only(&self) -> bool {
        self.first_push_front().is_none()
    }

    pub fn first_push_front(&self) -> Option<usize> {
        self.ops
            .iter()
            .position(|op| matches!(op, Op::PushFront(_)))
    }

    pub fn count(&self, pred: impl Fn(&Op) -> bool) -> usize {
        self.ops.iter().filter(|op| pred(op)).count()
    }

    /// Truncated copy holding the first `n` operations.
    pub fn prefix(&self, n: usize) -> OpTrace {
        OpTrace {
            ops: self.ops[..n.min(self.ops.len())].to_vec(),
            seed: self.seed,
            generator: self.generator.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub fn parse_trace(text: &str) -> Result<OpTrace, ParseError> {
    let mut trace = OpTrace::new("file", Vec::new());
    for (i, line) in text.split('\n').enumerate() {
        let lineno = i + 1;
        let err = |message: String| ParseError {
            line: lineno,
            message,
        };
        if !line.is_ascii() {
            return Err(err("non-ASCII character".into()));
        }
        if line.contains('\r') {
            return Err(err("carriage return (LF line endings required)".into()));
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(name) = comment.strip_prefix("generator:") {
                trace.generator = name.trim().to_string();
            } else if let Some(seed) = comment.strip_prefix("seed:") {
                trace.seed = Some(
                    seed.trim()
                        .parse()
                        .map_err(|e| err(format!("bad seed: {e}")))?,
                );
            }
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        let Some(code) = tokens.next() else {
            continue;
        };
        let op = match code {
            "B" | "F" => {
                let value = tokens
                    .next()
                    .ok_or_else(|| err(format!("`{code}` needs an integer operand")))?
                    .parse::<i64>()
                    .map_err(|e| err(format!("bad operand: {e}")))?;
                if code == "B" {
                    Op::PushBack(value)
                } else {
                    Op::PushFront(value)
                }
            }
            "P" => Op::PopFront,
            "Q" => Op::Front,
            "E" => Op::IsEmpty,
            other => return Err(err(format!("unknown operation `{other}`"))),
        };
        if tokens.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
        trace.ops.push(op);
    }
    Ok(trace)
}

pub fn format_trace(trace: &OpTrace) -> String {
    let mut out = String::with_capacity(trace.ops.len() * 8 + 64);
    if !trace.generator.is_empty() {
        let _ = writeln!(out, "# generator: {}", trace.generator);
    }
    if let Some(seed) = trace.seed {
        let _ = writeln!(out, "# seed: {seed}");
    }
    let _ = writeln!(out, "# length: {}", trace.ops.len());
    for op in &trace.ops {
        let _ = writeln!(out, "{op}");
    }
    out
}
