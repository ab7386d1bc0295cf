use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use linkq::{Mode, VariantId};

use crate::error::ConfigError;
use crate::workload::WorkloadSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Header,
    Blank,
    Circular,
    Lazy,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Replay workloads across linked queue variants and report counters and
/// timing.
#[derive(Debug, Parser)]
#[command(name = "qbench", version)]
struct Cli {
    /// Variant to run; repeat the flag or pass `all`.
    #[arg(long = "variant", value_enum, required = true)]
    variants: Vec<VariantArg>,

    /// Generator and parameters, e.g. `burst:k=64,rounds=1000`.
    #[arg(
        long,
        required_unless_present = "trace_file",
        conflicts_with = "trace_file"
    )]
    workload: Option<WorkloadSpec>,

    /// Replay a trace file instead of a generator.
    #[arg(long = "trace-file")]
    trace_file: Option<PathBuf>,

    /// Number of operations taken from the start of the workload (default:
    /// all of it).
    #[arg(long)]
    ops: Option<usize>,

    /// Leading operations replayed before the counters are reset.
    #[arg(long, default_value_t = 0)]
    warmup: usize,

    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    reps: u32,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Validate every handle access (generation-checked store).
    #[arg(long)]
    checked: bool,

    /// Run (variant, repetition) pairs on a thread pool.
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WorkloadSource {
    Generator(WorkloadSpec),
    TraceFile(PathBuf),
}

impl WorkloadSource {
    pub fn label(&self) -> String {
        match self {
            WorkloadSource::Generator(spec) => spec.to_string(),
            WorkloadSource::TraceFile(path) => format!("file:{}", path.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub variants: Vec<VariantId>,
    pub workload: WorkloadSource,
    pub ops: Option<usize>,
    pub warmup: usize,
    pub reps: usize,
    pub format: Format,
    pub mode: Mode,
    pub parallel: bool,
}

impl BenchConfig {
    pub fn new(variants: Vec<VariantId>, workload: WorkloadSpec) -> Self {
        Self {
            variants,
            workload: WorkloadSource::Generator(workload),
            ops: None,
            warmup: 0,
            reps: 1,
            format: Format::Json,
            mode: Mode::Fast,
            parallel: false,
        }
    }
}

fn expand_variants(args: &[VariantArg]) -> Vec<VariantId> {
    let mut out = Vec::new();
    for arg in args {
        let ids: &[VariantId] = match arg {
            VariantArg::Header => &[VariantId::Header],
            VariantArg::Blank => &[VariantId::Blank],
            VariantArg::Circular => &[VariantId::Circular],
            VariantArg::Lazy => &[VariantId::Lazy],
            VariantArg::All => &VariantId::ALL,
        };
        for id in ids {
            if !out.contains(id) {
                out.push(*id);
            }
        }
    }
    out
}

pub fn parse_args<I, T>(argv: I) -> Result<BenchConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let workload = match (cli.workload, cli.trace_file) {
        (Some(spec), None) => WorkloadSource::Generator(spec),
        (None, Some(path)) => WorkloadSource::TraceFile(path),
        _ => unreachable!("clap enforces exactly one workload source"),
    };
    if let Some(ops) = cli.ops {
        if cli.warmup > ops {
            return Err(ConfigError::WarmupExceedsOps {
                warmup: cli.warmup,
                ops,
            });
        }
    }
    Ok(BenchConfig {
        variants: expand_variants(&cli.variants),
        workload,
        ops: cli.ops,
        warmup: cli.warmup,
        reps: cli.reps as usize,
        format: cli.format,
        mode: if cli.checked {
            Mode::Checked
        } else {
            Mode::Fast
        },
        parallel: cli.parallel,
    })
}
