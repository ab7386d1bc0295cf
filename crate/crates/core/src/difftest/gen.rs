//! Deterministic workload generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::trace::{Op, OpTrace};

/// Probabilities of drawing each pushing/popping operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mix {
    pub push_back: f64,
    pub push_front: f64,
    pub pop_front: f64,
}

impl Mix {
    /// Half push_back, half pop_front.
    pub const QUEUE: Mix = Mix {
        push_back: 0.5,
        push_front: 0.0,
        pop_front: 0.5,
    };

    pub fn validate(&self) -> Result<(), MixError> {
        let parts = [self.push_back, self.push_front, self.pop_front];
        if parts.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(MixError(*self));
        }
        let sum: f64 = parts.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(MixError(*self));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("invalid mix {0:?}: probabilities must be non-negative and sum to 1")]
pub struct MixError(pub Mix);

/// `n` operations drawn from `mix`. A pop drawn while the model is empty is
/// replaced by a push_back, and pushed values count up from 0, so every
/// trace is precondition-clean and every pushed value is distinct.
pub fn gen_random(seed: u64, n: usize, mix: Mix) -> Result<OpTrace, MixError> {
    mix.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ops = Vec::with_capacity(n);
    let mut len = 0usize;
    let mut next_value = 0i64;
    let front_cut = mix.push_back + mix.push_front;
    for _ in 0..n {
        let u: f64 = rng.gen();
        let op = if u < mix.push_back || (u >= front_cut && len == 0) {
            Op::PushBack(next_value)
        } else if u < front_cut {
            Op::PushFront(next_value)
        } else {
            Op::PopFront
        };
        match op {
            Op::PopFront => len -= 1,
            _ => {
                next_value += 1;
                len += 1;
            }
        }
        ops.push(op);
    }
    Ok(OpTrace {
        ops,
        seed: Some(seed),
        generator: "random".into(),
    })
}

/// `rounds` repetitions of `k` pushes followed by `k` pops.
pub fn gen_burst(k: usize, rounds: usize) -> OpTrace {
    let mut ops = Vec::with_capacity(2 * k * rounds);
    let mut next_value = 0i64;
    for _ in 0..rounds {
        for _ in 0..k {
            ops.push(Op::PushBack(next_value));
            next_value += 1;
        }
        ops.extend(std::iter::repeat_n(Op::PopFront, k));
    }
    OpTrace::new("burst", ops)
}

/// For `i` in `1..=max`: `i` pushes then `i` pops.
pub fn gen_ramp(max: usize) -> OpTrace {
    let mut ops = Vec::with_capacity(max * (max + 1));
    let mut next_value = 0i64;
    for i in 1..=max {
        for _ in 0..i {
            ops.push(Op::PushBack(next_value));
            next_value += 1;
        }
        ops.extend(std::iter::repeat_n(Op::PopFront, i));
    }
    OpTrace::new("ramp", ops)
}

/// `fill` pushes, then `pairs` rounds of one push and one pop. The queue
/// length stays `fill` throughout the alternating part.
pub fn gen_alternating(fill: usize, pairs: usize) -> OpTrace {
    let mut ops = Vec::with_capacity(fill + 2 * pairs);
    let mut next_value = 0i64;
    for _ in 0..fill {
        ops.push(Op::PushBack(next_value));
        next_value += 1;
    }
    for _ in 0..pairs {
        ops.push(Op::PushBack(next_value));
        next_value += 1;
        ops.push(Op::PopFront);
    }
    OpTrace::new("alternate", ops)
}

/// Every trace of length `0..=max_len` over the pushes of `values` (at the
/// back, and at the front when `push_front` is set) and `PopFront`. Pops on
/// an empty structure are included.
pub fn exhaustive_traces(
    max_len: usize,
    values: &[i64],
    push_front: bool,
) -> impl Iterator<Item = OpTrace> {
    let mut alphabet: Vec<Op> = values.iter().map(|&v| Op::PushBack(v)).collect();
    if push_front {
        alphabet.extend(values.iter().map(|&v| Op::PushFront(v)));
    }
    alphabet.push(Op::PopFront);
    let k = alphabet.len();

    (0..=max_len).flat_map(move |len| {
        let alphabet = alphabet.clone();
        let total = k.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut ops = Vec::with_capacity(len);
            for _ in 0..len {
                ops.push(alphabet[code % k]);
                code /= k;
            }
            OpTrace::new("exhaustive", ops)
        })
    })
}
