//! Machine-readable verification reports.
//!
//! A report carries every swept cell, its exact value (decimal or
//! polynomial string, never floats), the family it was checked against,
//! and a status. Mismatching cells are duplicated into `counterexamples`
//! so a failing report is reproducible on its own. Serialization goes
//! through `serde_json::Value`, whose maps are ordered, so emitting,
//! parsing and re-emitting a report is byte-identical.

use std::collections::BTreeMap;

use serde::Serialize;

/// Per-cell verdict. `OutOfFamily` marks surfaced-but-allowed cells: the
/// families the source text leaves open, and partitions that extend the
/// stated formulas by analogy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    Mismatch,
    OutOfFamily,
}

/// One swept parameter cell. Row/column fields apply to triangle sweeps,
/// `n` to complex sweeps; unused fields are omitted from JSON.
#[derive(Clone, Debug, Serialize)]
pub struct CellRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub m: u32,
    pub s: u32,
    pub value: String,
    pub expected: String,
    pub status: CellStatus,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl CellRecord {
    pub(crate) fn triangle(d: u32, row: u32, col: i64, m: u32, s: u32) -> Self {
        CellRecord {
            d: Some(d),
            row: Some(row),
            col: Some(col),
            n: None,
            m,
            s,
            value: String::new(),
            expected: String::new(),
            status: CellStatus::Match,
            notes: BTreeMap::new(),
        }
    }

    pub(crate) fn complex(n: u32, m: u32, s: u32) -> Self {
        CellRecord {
            d: None,
            row: None,
            col: None,
            n: Some(n),
            m,
            s,
            value: String::new(),
            expected: String::new(),
            status: CellStatus::Match,
            notes: BTreeMap::new(),
        }
    }
}

/// Deterministic counters; nothing wall-clock-dependent lives in a report.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub cells: u64,
    pub matches: u64,
    pub mismatches: u64,
    pub out_of_family: u64,
}

/// Result of one proposition sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub proposition: String,
    pub parameters: BTreeMap<String, String>,
    pub summary: Summary,
    pub counterexamples: Vec<CellRecord>,
    pub cells: Vec<CellRecord>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        proposition: &str,
        parameters: BTreeMap<String, String>,
        cells: Vec<CellRecord>,
    ) -> Self {
        let mut summary = Summary {
            cells: cells.len() as u64,
            ..Summary::default()
        };
        let mut counterexamples = Vec::new();
        for cell in &cells {
            match cell.status {
                CellStatus::Match => summary.matches += 1,
                CellStatus::Mismatch => {
                    summary.mismatches += 1;
                    counterexamples.push(cell.clone());
                }
                CellStatus::OutOfFamily => summary.out_of_family += 1,
            }
        }
        VerificationReport {
            proposition: proposition.to_string(),
            parameters,
            summary,
            counterexamples,
            cells,
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatches > 0
    }

    /// Canonical JSON value (alphabetically ordered keys throughout).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatches_are_copied_into_counterexamples() {
        let mut bad = CellRecord::triangle(2, 3, 0, 1, 0);
        bad.value = "7".into();
        bad.expected = "0 or +-1".into();
        bad.status = CellStatus::Mismatch;
        let good = CellRecord::triangle(2, 3, 1, 1, 0);
        let report =
            VerificationReport::assemble("demo", BTreeMap::new(), vec![good, bad]);
        assert_eq!(report.summary.mismatches, 1);
        assert_eq!(report.counterexamples.len(), 1);
        assert_eq!(report.counterexamples[0].value, "7");
        assert!(report.has_mismatch());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut cell = CellRecord::complex(4, 3, 0);
        cell.value = "1 + q^2".into();
        cell.expected = "q-fibonacci".into();
        let report = VerificationReport::assemble(
            "demo",
            BTreeMap::from([("max_n".to_string(), "4".to_string())]),
            vec![cell],
        );
        let text = serde_json::to_string_pretty(&report.to_json()).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&reparsed).unwrap(), text);
    }
}
