//! Aggregation of per-graph rows into a sweep report.
//!
//! Rows are sorted by `(n, key)` so that identical inputs give identical
//! reports whatever order the rows were computed in.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::checks::{check_conjectures, clique_plus_isolated, star_plus_isolated, ConjectureRow};
use super::peel::peel_chordal;
use super::LabError;
use crate::canon::GraphKey;
use crate::engine::Engine;
use crate::graph::Graph;
use crate::numbers::Sequences;
use crate::rational::ExactRational;

/// Which bound a class summary refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassKind {
    /// Graphs of order `n` with chromatic number `chi`.
    Chromatic,
    /// Graphs of order `n` with maximum degree `Delta`.
    MaxDegree,
    /// All graphs of order `n`.
    Order,
}

impl ClassKind {
    /// Position of the matching bound in the row flags.
    pub fn bound_index(self) -> usize {
        match self {
            ClassKind::Chromatic => 0,
            ClassKind::MaxDegree => 1,
            ClassKind::Order => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Chromatic => "chi",
            ClassKind::MaxDegree => "delta",
            ClassKind::Order => "order",
        }
    }
}

/// The graphs attaining the least `A` in one class, compared with the
/// expected extremal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub kind: ClassKind,
    pub n: usize,
    /// `chi` or `Delta`; equal to `n` for [`ClassKind::Order`].
    pub value: usize,
    pub graphs: usize,
    pub min_a: ExactRational,
    pub minimizers: Vec<GraphKey>,
    pub expected: GraphKey,
    /// The expected graph is among the rows of this class.
    pub expected_present: bool,
}

impl ClassSummary {
    /// The minimum is attained only by the expected graph. Vacuous when the
    /// input did not contain it; the per-row checks still apply.
    pub fn confirmed(&self) -> bool {
        !self.expected_present || (self.minimizers.len() == 1 && self.minimizers[0] == self.expected)
    }
}

/// Result of restricting the rows to a subfamily whose bounds are proved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confirmation {
    pub name: &'static str,
    pub graphs: usize,
    pub failures: Vec<GraphKey>,
}

impl Confirmation {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<ConjectureRow>,
    pub summaries: Vec<ClassSummary>,
    pub confirmations: Vec<Confirmation>,
    /// Inputs not checked because they exceed the engine limit.
    pub skipped: usize,
}

impl SweepReport {
    /// Failed pass flags over all rows, plus unconfirmed summaries and
    /// failed subfamily confirmations.
    pub fn violations(&self) -> usize {
        self.violations_among([true; 3])
    }

    /// As [`violations`](Self::violations), restricted to the selected bounds
    /// (chromatic, degree, empty graph); confirmations always count.
    pub fn violations_among(&self, selected: [bool; 3]) -> usize {
        let rows: usize = self
            .rows
            .iter()
            .map(|r| (0..3).filter(|&i| selected[i] && !r.pass[i]).count())
            .sum();
        let summaries = self
            .summaries
            .iter()
            .filter(|s| selected[s.kind.bound_index()] && !s.confirmed())
            .count();
        rows + summaries + self.confirmations.iter().map(|c| c.failures.len()).sum::<usize>()
    }

    pub fn violation_count_for(&self, bound: usize) -> usize {
        self.rows.iter().filter(|r| !r.pass[bound]).count()
    }
}

fn summarize(rows: &[ConjectureRow], kind: ClassKind) -> Vec<ClassSummary> {
    let mut classes: BTreeMap<(usize, usize), Vec<&ConjectureRow>> = BTreeMap::new();
    for r in rows {
        let value = match kind {
            ClassKind::Chromatic => r.chi,
            ClassKind::MaxDegree => r.delta,
            ClassKind::Order => r.n,
        };
        classes.entry((r.n, value)).or_default().push(r);
    }
    classes
        .into_iter()
        .map(|((n, value), members)| {
            let min_a = members.iter().map(|r| &r.a).min().expect("nonempty").clone();
            let minimizers = members.iter().filter(|r| r.a == min_a).map(|r| r.key.clone()).collect();
            let expected = match kind {
                ClassKind::Chromatic => clique_plus_isolated(value, n),
                ClassKind::MaxDegree => star_plus_isolated(value, n),
                ClassKind::Order => Graph::empty(n),
            };
            let expected = GraphKey::of(&expected);
            ClassSummary {
                kind,
                n,
                value,
                graphs: members.len(),
                min_a,
                minimizers,
                expected_present: members.iter().any(|r| r.key == expected),
                expected,
            }
        })
        .collect()
}

fn confirm(rows: &[ConjectureRow], name: &'static str, select: impl Fn(&ConjectureRow) -> bool, ok: impl Fn(&ConjectureRow) -> bool) -> Confirmation {
    let chosen: Vec<&ConjectureRow> = rows.iter().filter(|r| select(r)).collect();
    Confirmation {
        name,
        graphs: chosen.len(),
        failures: chosen.into_iter().filter(|r| !ok(r)).map(|r| r.key.clone()).collect(),
    }
}

/// Sorts rows and derives the per-class summaries and the subfamily
/// confirmations.
///
/// Subfamilies: maximum degree 1 (chromatic and degree bounds coincide and
/// both hold), maximum degree 2 (both bounds hold with the proved equality
/// cases), and chordal graphs (both bounds hold). `chordal_peels` lists the
/// keys of chordal graphs whose peel traces failed.
pub fn assemble_report(mut rows: Vec<ConjectureRow>, skipped: usize, chordal_peels: Vec<GraphKey>, chordal_count: usize) -> SweepReport {
    rows.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    let mut summaries = summarize(&rows, ClassKind::Order);
    summaries.extend(summarize(&rows, ClassKind::Chromatic));
    summaries.extend(summarize(&rows, ClassKind::MaxDegree));
    let confirmations = alloc::vec![
        confirm(&rows, "max-degree-1", |r| r.delta == 1, |r| r.l2 == r.l3 && r.pass[0] && r.pass[1]),
        confirm(&rows, "max-degree-2", |r| r.delta == 2, |r| r.pass[0] && r.pass[1]),
        confirm(&rows, "chordal", |r| r.graph.is_chordal(), |r| r.pass[0] && r.pass[1] && r.pass[2]),
        Confirmation {
            name: "chordal-peel",
            graphs: chordal_count,
            failures: chordal_peels,
        },
    ];
    SweepReport {
        rows,
        summaries,
        confirmations,
        skipped,
    }
}

/// Per-graph work of a sweep: the conjecture row and, for chordal graphs,
/// whether both peels were strictly decreasing and reached their targets.
pub fn sweep_one(engine: &mut Engine, seq: &mut Sequences, g: &Graph) -> Result<(ConjectureRow, Option<bool>), LabError> {
    let row = check_conjectures(engine, seq, g)?;
    let peel = if g.is_chordal() {
        Some(peel_chordal(engine, g)?.holds())
    } else {
        None
    };
    Ok((row, peel))
}

/// Single-threaded sweep. Graphs above the engine limit are counted as
/// skipped.
pub fn sweep(engine: &mut Engine, graphs: &[Graph]) -> Result<SweepReport, LabError> {
    let mut seq = Sequences::new();
    let mut results = Vec::with_capacity(graphs.len());
    let mut skipped = 0;
    for g in graphs {
        if g.order() > engine.limit() || g.order() == 0 {
            skipped += 1;
            continue;
        }
        results.push(sweep_one(engine, &mut seq, g)?);
    }
    Ok(collect(results, skipped))
}

/// Builds the report from per-graph results in any order.
pub fn collect(results: Vec<(ConjectureRow, Option<bool>)>, skipped: usize) -> SweepReport {
    let mut rows = Vec::with_capacity(results.len());
    let mut failed = Vec::new();
    let mut chordal = 0;
    for (row, peel) in results {
        if let Some(ok) = peel {
            chordal += 1;
            if !ok {
                failed.push(row.key.clone());
            }
        }
        rows.push(row);
    }
    failed.sort();
    assemble_report(rows, skipped, failed, chordal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::catalogue::catalogue_up_to;

    #[test]
    fn small_sweep_confirms_everything() {
        let graphs = catalogue_up_to(5).unwrap();
        let report = sweep(&mut Engine::new(), &graphs).unwrap();
        assert_eq!(report.rows.len(), 1 + 2 + 4 + 11 + 34);
        assert_eq!(report.violations(), 0);
        assert!(report.summaries.iter().all(ClassSummary::confirmed));
        assert!(report.confirmations.iter().all(Confirmation::holds));
        let order5 = report
            .summaries
            .iter()
            .find(|s| s.kind == ClassKind::Order && s.n == 5)
            .unwrap();
        assert_eq!(order5.graphs, 34);
        assert_eq!(order5.expected, GraphKey::of(&Graph::empty(5)));
        assert!(report.summaries.iter().all(|s| s.expected_present));
    }

    #[test]
    fn missing_extremal_graph_is_not_a_violation() {
        let report = sweep(&mut Engine::new(), &[Graph::path(4), Graph::cycle(4)]).unwrap();
        assert_eq!(report.violations(), 0);
        assert!(report.summaries.iter().all(|s| !s.expected_present));
    }

    #[test]
    fn report_order_is_independent_of_input_order() {
        let mut graphs = catalogue_up_to(4).unwrap();
        let a = sweep(&mut Engine::new(), &graphs).unwrap();
        graphs.reverse();
        let b = sweep(&mut Engine::new(), &graphs).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oversized_inputs_are_skipped() {
        let graphs = [Graph::empty(3), Graph::empty(6)];
        let report = sweep(&mut Engine::with_limit(5), &graphs).unwrap();
        assert_eq!((report.rows.len(), report.skipped), (1, 1));
    }
}
