//! Acceptance gate. One line per criterion; exits non-zero if any fails.
//!
//! Runs under `cargo test`; to see the lines on their own:
//! `cargo test -p qbench --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use linkq::difftest::{
    diff_check, diff_check_with, exhaustive_traces, gen_alternating, gen_burst, gen_ramp,
    gen_random, run_trace, DiffReport, Mix, Op, OpTrace,
};
use linkq::{
    BlankNodeQueue, CircularDeque, HeaderQueue, LazyCircularQueue, LinkedSequence, Metrics, Mode,
    NodeStore, VariantId,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_agreement(variant: VariantId, trace: &OpTrace, report: DiffReport) -> Result<(), String> {
    ensure(report.is_agreement(), || {
        format!("{variant} on {:?}: {report:?}", trace.ops)
    })
}

/// Number of pops in a precondition-clean trace.
fn dequeues(trace: &OpTrace) -> u64 {
    trace.count(|op| *op == Op::PopFront) as u64
}

fn enqueues(trace: &OpTrace) -> u64 {
    trace.count(|op| matches!(op, Op::PushBack(_))) as u64
}

// 1. Every trace of length <= 8 over a 2-value alphabet.
fn exhaustive_oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut checked = 0usize;
    for variant in VariantId::ALL {
        for trace in exhaustive_traces(8, &[0, 1], variant.supports_push_front()) {
            ensure_agreement(variant, &trace, diff_check(variant, &trace))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (variant, trace) pairs agree, checked mode, {:.1?}",
        start.elapsed()
    ))
}

// 2. 20 seeds x 10^6 ops per variant, fast mode.
fn randomized_oracle_equivalence() -> Verdict {
    const SEEDS: u64 = 20;
    const OPS: usize = 1_000_000;
    const PER_VARIANT_LIMIT: Duration = Duration::from_secs(60);
    let results: Vec<Result<Duration, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = VariantId::ALL
            .iter()
            .map(|&variant| {
                scope.spawn(move || {
                    let start = Instant::now();
                    for seed in 0..SEEDS {
                        let trace = gen_random(seed, OPS, Mix::QUEUE).unwrap();
                        let report = diff_check_with(variant, &trace, Mode::Fast);
                        if !report.is_agreement() {
                            return Err(format!("{variant} seed {seed}: {report:?}"));
                        }
                    }
                    Ok(start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut times = Vec::new();
    for (variant, r) in VariantId::ALL.iter().zip(results) {
        let t = r?;
        ensure(t < PER_VARIANT_LIMIT, || {
            format!("{variant} took {t:.1?}, limit {PER_VARIANT_LIMIT:?}")
        })?;
        times.push(format!("{variant} {:.1?}", t));
    }
    Ok(format!(
        "{SEEDS} seeds x {OPS} ops agree; {}",
        times.join(", ")
    ))
}

// 3. Comparisons: 0 for blank and circular, d for header.
fn branch_freedom() -> Verdict {
    let mut workloads = vec![
        gen_burst(64, 100),
        gen_burst(1, 1000),
        gen_ramp(60),
        gen_alternating(63, 5000),
    ];
    for seed in 0..5 {
        workloads.push(gen_random(seed, 50_000, Mix::QUEUE).unwrap());
    }
    let mut total_d = 0;
    for trace in &workloads {
        let d = dequeues(trace);
        total_d += d;
        for variant in [VariantId::Header, VariantId::Blank, VariantId::Circular] {
            let out = run_trace(variant, &mut NodeStore::checked(), trace).unwrap();
            let want = if variant == VariantId::Header { d } else { 0 };
            ensure(out.metrics.comparisons == want, || {
                format!(
                    "{variant} on {}: {} comparisons, expected {want}",
                    trace.generator, out.metrics.comparisons
                )
            })?;
        }
    }
    Ok(format!(
        "{} workloads, {total_d} dequeues: header == d, blank == circular == 0",
        workloads.len()
    ))
}

// 4. Exact per-op deltas of the blank-node queue.
fn step_count_profile() -> Verdict {
    let enqueue = Metrics {
        data_writes: 1,
        allocations: 1,
        link_writes: 1,
        register_writes: 1,
        ..Metrics::ZERO
    };
    let dequeue = Metrics {
        register_writes: 1,
        deallocations: 1,
        ..Metrics::ZERO
    };
    let trace = gen_random(4, 10_000, Mix::QUEUE).unwrap();
    let mut store = NodeStore::checked();
    let mut q = BlankNodeQueue::new(&mut store);
    let mut snapshots = 0;
    for (i, op) in trace.ops.iter().enumerate() {
        let before = store.snapshot();
        let want = match *op {
            Op::PushBack(v) => {
                q.enqueue(&mut store, v).unwrap();
                enqueue
            }
            Op::PopFront => {
                q.dequeue(&mut store).unwrap();
                dequeue
            }
            _ => unreachable!(),
        };
        let got = store.snapshot() - before;
        snapshots += 1;
        ensure(got == want, || {
            format!("op {i} {op}: {got:?}, expected {want:?}")
        })?;
    }
    Ok(format!(
        "{snapshots} per-op snapshots: enqueue {{data 1, alloc 1, link 1, reg 1}}, dequeue {{reg 1, dealloc 1}}"
    ))
}

// 5. Lazy queue at capacity 64: a 10^5-op alternating window never allocates.
fn lazy_steady_state() -> Verdict {
    const CAPACITY: usize = 64;
    const WINDOW: usize = 100_000;
    let mut store = NodeStore::checked();
    let mut q = LazyCircularQueue::new(&mut store).unwrap();
    let mut next = 0i64;
    for _ in 0..CAPACITY {
        q.enqueue(&mut store, next).unwrap();
        next += 1;
    }
    q.dequeue(&mut store).unwrap();
    ensure(q.capacity() == CAPACITY, || {
        format!("warm-up capacity {}", q.capacity())
    })?;

    let dequeue_profile = Metrics {
        register_writes: 1,
        ..Metrics::ZERO
    };
    store.reset_metrics();
    for i in 0..WINDOW {
        if i % 2 == 0 {
            q.enqueue(&mut store, next).unwrap();
            next += 1;
        } else {
            let before = store.snapshot();
            q.dequeue(&mut store).unwrap();
            let got = store.snapshot() - before;
            ensure(got == dequeue_profile, || format!("dequeue {i}: {got:?}"))?;
        }
    }
    let m = store.snapshot();
    ensure(m.allocations == 0 && m.deallocations == 0, || {
        format!("window counters {m:?}")
    })?;
    ensure(q.capacity() == CAPACITY, || {
        format!("capacity grew to {}", q.capacity())
    })?;
    q.check_structure(&store, CAPACITY - 1)
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "capacity {CAPACITY}, {WINDOW}-op window: 0 allocations, 0 deallocations, dequeue = 1 register write"
    ))
}

// 6. live nodes == len + 1 (capacity + 1 for lazy) after every op.
fn node_count_laws() -> Verdict {
    fn walk<S: LinkedSequence<i64>>(trace: &OpTrace) -> Result<usize, String> {
        let mut store = NodeStore::checked();
        let mut s = S::create(&mut store).map_err(|e| e.to_string())?;
        let mut len = 0usize;
        for (i, &op) in trace.ops.iter().enumerate() {
            match op {
                Op::PushBack(v) => s.push_back(&mut store, v).map_err(|e| e.to_string())?,
                Op::PushFront(v) => s.push_front(&mut store, v).map_err(|e| e.to_string())?,
                Op::PopFront => {
                    s.pop_front(&mut store).map_err(|e| e.to_string())?;
                }
                _ => unreachable!(),
            }
            len = if op.is_push() { len + 1 } else { len - 1 };
            let want = s.expected_live_nodes(len);
            ensure(store.live_count() == want, || {
                format!(
                    "{} op {i}: {} live, expected {want}",
                    S::VARIANT,
                    store.live_count()
                )
            })?;
            if S::VARIANT != VariantId::Lazy {
                ensure(want == len + 1, || {
                    format!("{} op {i}: law is not len+1", S::VARIANT)
                })?;
            }
            s.check_structure(&store, len)
                .map_err(|e| format!("{} op {i}: {e}", S::VARIANT))?;
        }
        Ok(trace.len())
    }

    let queue = gen_random(6, 10_000, Mix::QUEUE).unwrap();
    let deque = gen_random(
        6,
        10_000,
        Mix {
            push_back: 0.3,
            push_front: 0.25,
            pop_front: 0.45,
        },
    )
    .unwrap();
    walk::<HeaderQueue>(&queue)?;
    walk::<BlankNodeQueue>(&queue)?;
    walk::<CircularDeque>(&deque)?;
    walk::<LazyCircularQueue>(&queue)?;

    let mut store = NodeStore::checked();
    let mut lazy = LazyCircularQueue::new(&mut store).unwrap();
    for v in [0, 1, 2] {
        lazy.enqueue(&mut store, v).unwrap();
    }
    let front = lazy.dequeue(&mut store).unwrap();
    ensure(front == 0, || format!("dequeued {front}"))?;
    lazy.check_structure(&store, 2).map_err(|e| e.to_string())?;
    ensure(lazy.capacity() == 3 && store.live_count() == 4, || {
        format!(
            "scenario: capacity {}, live {}",
            lazy.capacity(),
            store.live_count()
        )
    })?;
    Ok(
        "per-op laws hold on 10^4-op traces; enqueue 0,1,2 + dequeue gives len 2, capacity 3"
            .into(),
    )
}

// 7. Empty and one-element representations.
fn boundary_representations() -> Verdict {
    let mut store = NodeStore::<i64>::checked();

    let mut blank = BlankNodeQueue::new(&mut store);
    ensure(blank.left() == blank.right(), || {
        "empty blank: left != right".into()
    })?;
    blank.enqueue(&mut store, 7).map_err(|e| e.to_string())?;
    ensure(store.read_next(blank.left()) == Ok(blank.right()), || {
        "one-element blank: S(left) != right".into()
    })?;
    blank.dequeue(&mut store).map_err(|e| e.to_string())?;
    ensure(blank.left() == blank.right(), || {
        "drained blank: left != right".into()
    })?;

    let mut circ = CircularDeque::new(&mut store).unwrap();
    ensure(store.read_next(circ.right()) == Ok(circ.right()), || {
        "empty circular: no self-loop".into()
    })?;
    circ.push_back(&mut store, 1).unwrap();
    circ.pop_front(&mut store).unwrap();
    ensure(store.read_next(circ.right()) == Ok(circ.right()), || {
        "drained circular: no self-loop".into()
    })?;

    let mut header = HeaderQueue::new(&mut store).unwrap();
    header.enqueue(&mut store, 1).unwrap();
    header.enqueue(&mut store, 2).unwrap();
    header.dequeue(&mut store).unwrap();
    ensure(header.rear() != header.header(), || {
        "R reset too early".into()
    })?;
    header.dequeue(&mut store).unwrap();
    ensure(header.rear() == header.header(), || {
        "last dequeue left R != H".into()
    })?;

    Ok("left == right; self-loop; S(left) == right; R reset to H".into())
}

// 8. create-trace-destroy balances the store.
fn leak_balance() -> Verdict {
    let mut traces = vec![
        OpTrace::default(),
        gen_burst(64, 100),
        gen_ramp(40),
        gen_alternating(63, 1000),
    ];
    for seed in 0..10 {
        traces.push(gen_random(seed, 20_000, Mix::QUEUE).unwrap());
    }
    let deque_mix = Mix {
        push_back: 0.35,
        push_front: 0.3,
        pop_front: 0.35,
    };
    let deque_traces: Vec<_> = (0..5)
        .map(|seed| gen_random(seed, 20_000, deque_mix).unwrap())
        .collect();
    let small: Vec<_> = exhaustive_traces(5, &[0, 1], true).collect();

    let mut runs = 0;
    for variant in VariantId::ALL {
        let mut all: Vec<&OpTrace> = traces.iter().collect();
        if variant.supports_push_front() {
            all.extend(&deque_traces);
        }
        all.extend(
            small
                .iter()
                .filter(|t| variant.supports_push_front() || t.is_queue_only()),
        );
        for trace in all {
            let out =
                run_trace(variant, &mut NodeStore::checked(), trace).map_err(|e| e.to_string())?;
            let m = out.final_metrics;
            ensure(
                out.final_live == 0 && m.allocations == m.deallocations,
                || {
                    format!(
                        "{variant} on {}: live {}, {m:?}",
                        trace.generator, out.final_live
                    )
                },
            )?;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} create-trace-destroy runs: live 0, allocations == deallocations"
    ))
}

// 9. CSV from the binary: comparisons column and determinism.
fn cli_contract() -> Verdict {
    let run = || -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_qbench"))
            .args([
                "--variant",
                "all",
                "--workload",
                "burst:k=64,rounds=100",
                "--format",
                "csv",
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!(
                "exit {:?}: {}",
                out.status,
                String::from_utf8_lossy(&out.stderr)
            )
        })?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let parse = |text: &str| -> Result<Vec<qbench::RunRecord>, String> {
        csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())
    };
    let first = parse(&run()?)?;
    let second = parse(&run()?)?;

    let trace = gen_burst(64, 100);
    let d = dequeues(&trace);
    let e = enqueues(&trace);
    ensure(first.len() == 4, || format!("{} rows", first.len()))?;
    for row in &first {
        let want = match row.variant.as_str() {
            "header" => d,
            "blank" | "circular" => 0,
            "lazy" => e,
            other => return Err(format!("unexpected variant {other}")),
        };
        ensure(row.comparisons == want, || {
            format!(
                "{}: comparisons {}, expected {want}",
                row.variant, row.comparisons
            )
        })?;
    }
    for (a, b) in first.iter().zip(&second) {
        ensure(
            a.variant == b.variant && a.counters() == b.counters(),
            || format!("{} counters differ between invocations", a.variant),
        )?;
    }
    Ok(format!(
        "header {d}, blank 0, circular 0, lazy {e}; counter columns identical across 2 runs"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "AC1 oracle equivalence, exhaustive",
            exhaustive_oracle_equivalence,
        ),
        (
            "AC2 oracle equivalence, randomized",
            randomized_oracle_equivalence,
        ),
        ("AC3 branch-freedom", branch_freedom),
        ("AC4 step-count profile", step_count_profile),
        ("AC5 lazy steady state", lazy_steady_state),
        ("AC6 node-count laws", node_count_laws),
        ("AC7 boundary representations", boundary_representations),
        ("AC8 leak balance", leak_balance),
        ("AC9 CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
