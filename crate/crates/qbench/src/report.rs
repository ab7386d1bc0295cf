//! Run records and their JSON / CSV forms.

use linkq::{Metrics, VariantId};
use serde::{Deserialize, Serialize};

use crate::config::Format;

/// Column order of both output formats.
pub const FIELDS: [&str; 14] = [
    "variant",
    "workload",
    "rep",
    "ops",
    "ns_total",
    "ns_per_op",
    "allocations",
    "deallocations",
    "data_writes",
    "link_writes",
    "register_writes",
    "comparisons",
    "peak_live",
    "final_live",
];

/// One (variant, workload, repetition) measurement. Counters cover the
/// measured window only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub variant: String,
    pub workload: String,
    pub rep: usize,
    pub ops: u64,
    pub ns_total: u64,
    pub ns_per_op: f64,
    pub allocations: u64,
    pub deallocations: u64,
    pub data_writes: u64,
    pub link_writes: u64,
    pub register_writes: u64,
    pub comparisons: u64,
    pub peak_live: u64,
    pub final_live: u64,
}

impl RunRecord {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        variant: VariantId,
        workload: String,
        rep: usize,
        ops: u64,
        ns_total: u64,
        metrics: Metrics,
        peak_live: u64,
        final_live: u64,
    ) -> Self {
        let ns_per_op = if ops == 0 {
            0.0
        } else {
            ns_total as f64 / ops as f64
        };
        Self {
            variant: variant.as_str().to_string(),
            workload,
            rep,
            ops,
            ns_total,
            ns_per_op,
            allocations: metrics.allocations,
            deallocations: metrics.deallocations,
            data_writes: metrics.data_writes,
            link_writes: metrics.link_writes,
            register_writes: metrics.register_writes,
            comparisons: metrics.comparisons,
            peak_live,
            final_live,
        }
    }

    pub fn metrics(&self) -> Metrics {
        Metrics {
            allocations: self.allocations,
            deallocations: self.deallocations,
            data_writes: self.data_writes,
            link_writes: self.link_writes,
            register_writes: self.register_writes,
            comparisons: self.comparisons,
        }
    }

    /// Everything except timing.
    pub fn counters(&self) -> (Metrics, u64, u64, u64) {
        (self.metrics(), self.ops, self.peak_live, self.final_live)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricsReport {
    pub runs: Vec<RunRecord>,
}

pub fn emit_report(report: &MetricsReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(&report.runs).expect("run records serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(FIELDS).expect("write to memory");
            for run in &report.runs {
                w.serialize(run).expect("write to memory");
            }
            let bytes = w.into_inner().expect("flush to memory");
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(ns_total: u64) -> RunRecord {
        RunRecord::new(
            VariantId::Header,
            "burst:k=2,rounds=3".into(),
            0,
            12,
            ns_total,
            Metrics {
                allocations: 6,
                deallocations: 6,
                data_writes: 6,
                link_writes: 18,
                register_writes: 9,
                comparisons: 6,
            },
            3,
            1,
        )
    }

    #[test]
    fn empty_csv_is_header_only() {
        let out = emit_report(&MetricsReport::default(), Format::Csv);
        assert_eq!(out, format!("{}\n", FIELDS.join(",")));
    }

    #[test]
    fn json_has_all_fields() {
        let report = MetricsReport {
            runs: vec![sample(1000)],
        };
        let v: serde_json::Value =
            serde_json::from_str(&emit_report(&report, Format::Json)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        let obj = arr[0].as_object().unwrap();
        assert_eq!(obj.len(), 14);
        for f in FIELDS {
            assert!(obj.contains_key(f), "{f}");
        }
        assert_eq!(obj["ns_per_op"].as_f64(), Some(1000.0 / 12.0));
    }

    #[test]
    fn json_and_csv_carry_identical_numbers() {
        let report = MetricsReport {
            runs: vec![sample(1000), sample(7), sample(0)],
        };
        let from_json: Vec<RunRecord> =
            serde_json::from_str(&emit_report(&report, Format::Json)).unwrap();
        let csv_text = emit_report(&report, Format::Csv);
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        assert_eq!(
            rdr.headers().unwrap().iter().collect::<Vec<_>>(),
            FIELDS.to_vec()
        );
        let from_csv: Vec<RunRecord> = rdr.deserialize().map(Result::unwrap).collect();
        assert_eq!(from_json, report.runs);
        assert_eq!(from_csv, report.runs);
    }
}
