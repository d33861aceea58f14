//! CSV and JSON forms of a sweep report. Rationals are written as `p/q`
//! with a separate decimal rounded to six places.

use std::io::Write;

use gbell_core::lab::checks::ConjectureRow;
use gbell_core::lab::report::{ClassSummary, Confirmation, SweepReport};
use gbell_core::ExactRational;
use serde::Serialize;

use crate::error::CliError;

pub const CSV_HEADER: [&str; 18] = [
    "key", "n", "m", "chi", "delta", "B", "T", "A", "A_dec", "L1", "L2", "L3", "c1", "c2", "c3", "eq1", "eq2", "eq3",
];

/// One report row. `c1`..`c3` tell whether the chromatic, degree and empty
/// graph bounds hold; `eq1`..`eq3` whether `A` equals them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowRecord {
    pub key: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub delta: usize,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "A_dec")]
    pub a_dec: String,
    #[serde(rename = "L1")]
    pub l1: String,
    #[serde(rename = "L2")]
    pub l2: String,
    #[serde(rename = "L3")]
    pub l3: String,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub eq1: bool,
    pub eq2: bool,
    pub eq3: bool,
}

fn decimal(r: &ExactRational) -> String {
    r.to_decimal(6)
}

impl From<&ConjectureRow> for RowRecord {
    fn from(r: &ConjectureRow) -> Self {
        RowRecord {
            key: r.key.to_string(),
            n: r.n,
            m: r.m,
            chi: r.chi,
            delta: r.delta,
            b: r.b.to_string(),
            t: r.t.to_string(),
            a: r.a.fraction_string(),
            a_dec: decimal(&r.a),
            l1: r.l1.fraction_string(),
            l2: r.l2.fraction_string(),
            l3: r.l3.fraction_string(),
            c1: r.pass[0],
            c2: r.pass[1],
            c3: r.pass[2],
            eq1: r.equal[0],
            eq2: r.equal[1],
            eq3: r.equal[2],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryRecord {
    pub class: &'static str,
    pub n: usize,
    pub value: usize,
    pub graphs: usize,
    pub min_a: String,
    pub min_a_dec: String,
    pub minimizers: Vec<String>,
    pub expected: String,
    pub expected_present: bool,
    pub confirmed: bool,
}

impl From<&ClassSummary> for SummaryRecord {
    fn from(s: &ClassSummary) -> Self {
        SummaryRecord {
            class: s.kind.name(),
            n: s.n,
            value: s.value,
            graphs: s.graphs,
            min_a: s.min_a.fraction_string(),
            min_a_dec: decimal(&s.min_a),
            minimizers: s.minimizers.iter().map(ToString::to_string).collect(),
            expected: s.expected.to_string(),
            expected_present: s.expected_present,
            confirmed: s.confirmed(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfirmationRecord {
    pub name: &'static str,
    pub graphs: usize,
    pub failures: Vec<String>,
}

impl From<&Confirmation> for ConfirmationRecord {
    fn from(c: &Confirmation) -> Self {
        ConfirmationRecord {
            name: c.name,
            graphs: c.graphs,
            failures: c.failures.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JsonReport {
    pub graphs: usize,
    pub skipped: usize,
    pub duplicates: usize,
    pub conjectures: Vec<usize>,
    pub violations: usize,
    pub rows: Vec<RowRecord>,
    pub summaries: Vec<SummaryRecord>,
    pub confirmations: Vec<ConfirmationRecord>,
}

pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in &report.rows {
        w.serialize(RowRecord::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn json_report(report: &SweepReport, duplicates: usize, selected: [bool; 3]) -> JsonReport {
    JsonReport {
        graphs: report.rows.len(),
        skipped: report.skipped,
        duplicates,
        conjectures: (1..=3).filter(|&c| selected[c - 1]).collect(),
        violations: report.violations_among(selected),
        rows: report.rows.iter().map(RowRecord::from).collect(),
        summaries: report.summaries.iter().map(SummaryRecord::from).collect(),
        confirmations: report.confirmations.iter().map(ConfirmationRecord::from).collect(),
    }
}

pub fn write_json<W: Write>(report: &SweepReport, duplicates: usize, selected: [bool; 3], mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, &json_report(report, duplicates, selected))?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbell_core::{Engine, Graph};

    fn report() -> SweepReport {
        gbell_core::lab::report::sweep(&mut Engine::new(), &[Graph::path(5).complement(), Graph::complete(3)]).unwrap()
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&report(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let k3 = lines.next().unwrap();
        assert!(k3.starts_with("03e0,3,3,3,2,1,3,3/1,3.000000,"), "{k3}");
        let p5 = lines.next().unwrap();
        assert!(p5.contains(",8,30,15/4,3.750000,"), "{p5}");
        assert!(lines.next().is_none());
    }

    #[test]
    fn json_mirrors_csv_rows() {
        let mut buf = Vec::new();
        write_json(&report(), 0, [true; 3], &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["graphs"], 2);
        let row = &v["rows"][1];
        for field in CSV_HEADER {
            assert!(row.get(field).is_some(), "{field}");
        }
        assert_eq!(row["A"], "15/4");
        assert_eq!(row["A_dec"], "3.750000");
        assert_eq!(v["violations"], 0);
    }
}
