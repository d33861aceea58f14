//! Named verification suites over documented parameter ranges.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::catalogue::catalogue_up_to;
use super::checks::{
    check_counterexample_remarks, check_cross_product, check_cycle_beats_path, check_q_below_cycle,
    check_removal_theorems, check_triangle_below_odd_cycles,
};
use super::LabError;
use crate::closed_forms::{
    a_clique_plus_isolated, a_cycle_complement, a_cycle_plus_isolated, a_empty, a_path_complement,
    a_tree_plus_isolated, b_path_complement, bound_l1, bound_l2, bound_l3, c3_expansion_as_displayed,
    check_c3_expansion, check_odd_cycle_decomposition, check_q_shift_identity, clique_plus_isolated_vector,
    s_union,
};
use crate::engine::Engine;
use crate::graph::Graph;
use crate::identities::{
    check_add_node, check_addition, check_deletion, check_dominant_vertex, check_join,
    check_union_clique_expansion, compare_vectors, Verdict,
};
use crate::numbers::Sequences;
use crate::rational::ExactRational;

/// Failures beyond this many are counted but not described.
const MAX_LISTED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// Descriptions of the first failures.
    pub failures: Vec<String>,
    /// Informational lines that do not affect the outcome.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(describe());
            }
        }
    }

    fn verdict(&mut self, what: impl fmt::Display, v: Verdict) {
        self.record(v.holds(), || match v {
            Verdict::Fails(m) => alloc::format!("{what}: {m}"),
            Verdict::Holds => unreachable!(),
        });
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, what: impl fmt::Display, left: &T, right: &T) {
        self.record(left == right, || alloc::format!("{what}: {left} != {right}"));
    }

    /// Adds another report's counts under this one.
    fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {} checks, {} failed [{}]", self.name, self.checked, self.failed, status)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Recurrences,
    Join,
    Union,
    ClosedForms,
    QLemmas,
    RemovalTheorems,
    Counterexamples,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Recurrences,
        Suite::Join,
        Suite::Union,
        Suite::ClosedForms,
        Suite::QLemmas,
        Suite::RemovalTheorems,
        Suite::Counterexamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Join => "join",
            Suite::Union => "union",
            Suite::ClosedForms => "closed-forms",
            Suite::QLemmas => "q-lemmas",
            Suite::RemovalTheorems => "removal-theorems",
            Suite::Counterexamples => "counterexamples",
        }
    }

    /// Default size parameter; see [`run_suite`] for its meaning per suite.
    pub fn default_bound(self) -> usize {
        match self {
            Suite::Recurrences => 6,
            Suite::Join => 9,
            Suite::Union => 8,
            Suite::ClosedForms => 12,
            Suite::QLemmas => 10,
            Suite::RemovalTheorems => 7,
            Suite::Counterexamples => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| alloc::format!("unknown suite `{s}`"))
    }
}

/// Runs `suite` with size parameter `bound` (the suite default when `None`):
///
/// * `recurrences`: graphs of order `<= bound`, every edge and non-edge, and
///   vertex addition through refined counts at every vertex,
/// * `join`: pairs with total order `<= bound`, dominant vertices up to
///   order `min(bound, 8)`,
/// * `union`: pairs with total order `<= bound`,
/// * `closed-forms`: orders up to `bound` (`bound + 2` for the complement
///   families, trees up to 8),
/// * `q-lemmas`: total order `<= bound`,
/// * `removal-theorems`: graphs of order `<= bound`, unions of total order
///   `<= bound + 3`,
/// * `counterexamples`: fixed graphs.
pub fn run_suite(engine: &mut Engine, suite: Suite, bound: Option<usize>) -> Result<SuiteReport, LabError> {
    let b = bound.unwrap_or_else(|| suite.default_bound());
    match suite {
        Suite::Recurrences => recurrences(engine, b),
        Suite::Join => join(engine, b),
        Suite::Union => union(engine, b),
        Suite::ClosedForms => closed_forms(engine, b),
        Suite::QLemmas => q_lemmas(engine, b),
        Suite::RemovalTheorems => removal_theorems(engine, b, b + 3),
        Suite::Counterexamples => counterexamples(engine),
    }
}

pub fn recurrences(engine: &mut Engine, max_n: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("recurrences");
    for g in catalogue_up_to(max_n)? {
        for (u, v) in g.edges() {
            report.verdict(alloc::format!("deletion on {g} at {u}-{v}"), check_deletion(engine, &g, u, v)?);
        }
        for (u, v) in g.non_edges() {
            report.verdict(alloc::format!("addition on {g} at {u}-{v}"), check_addition(engine, &g, u, v)?);
        }
        if g.order() >= 2 {
            for v in 0..g.order() {
                report.verdict(alloc::format!("vertex addition on {g} at {v}"), check_add_node(engine, &g, v)?);
            }
        }
    }
    Ok(report)
}

/// Unordered pairs `(g, h)` of catalogue graphs with total order `<= max_total`.
fn pairs(max_total: usize) -> Result<Vec<(Graph, Graph)>, LabError> {
    let all = catalogue_up_to(max_total.saturating_sub(1).min(super::catalogue::CATALOGUE_LIMIT))?;
    let mut out = Vec::new();
    for (i, g) in all.iter().enumerate() {
        for h in &all[i..] {
            if g.order() + h.order() <= max_total {
                out.push((g.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

pub fn join(engine: &mut Engine, max_total: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("join");
    for (g, h) in pairs(max_total)? {
        report.verdict(alloc::format!("join of {g} and {h}"), check_join(engine, &g, &h)?);
    }
    for g in catalogue_up_to(max_total.min(8))? {
        for v in (0..g.order()).filter(|&v| g.order() >= 2 && g.degree(v) + 1 == g.order()) {
            report.verdict(alloc::format!("dominant vertex {v} of {g}"), check_dominant_vertex(engine, &g, v)?);
        }
    }
    Ok(report)
}

pub fn union(engine: &mut Engine, max_total: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("union");
    let mut seq = Sequences::new();
    for (g, h) in pairs(max_total)? {
        report.verdict(
            alloc::format!("clique expansion of {g} with {h}"),
            check_union_clique_expansion(engine, &g, &h)?,
        );
        let (sg, sh) = (engine.s_vector(&g)?, engine.s_vector(&h)?);
        let direct = engine.s_vector(&g.disjoint_union(&h).expect("order fits"))?;
        let composed = s_union(&mut seq, &sg, &sh);
        report.verdict(alloc::format!("union vector of {g} and {h}"), compare_vectors("S(G∪H)", &composed, &direct));
        let swapped = s_union(&mut seq, &sh, &sg);
        report.verdict(alloc::format!("union commutes for {g} and {h}"), compare_vectors("S(H∪G)", &swapped, &composed));
    }
    let small = catalogue_up_to(3)?;
    for a in &small {
        for b in &small {
            for c in &small {
                let (sa, sb, sc) = (engine.s_vector(a)?, engine.s_vector(b)?, engine.s_vector(c)?);
                let ab = s_union(&mut seq, &sa, &sb);
                let left = s_union(&mut seq, &ab, &sc);
                let bc = s_union(&mut seq, &sb, &sc);
                let right = s_union(&mut seq, &sa, &bc);
                report.verdict(alloc::format!("union associates for {a}, {b}, {c}"), compare_vectors("S", &left, &right));
            }
        }
    }
    Ok(report)
}

pub fn closed_forms(engine: &mut Engine, max_n: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("closed-forms");
    let mut seq = Sequences::new();
    for n in 1..=max_n {
        let a = engine.average_colors(&Graph::empty(n))?;
        report.equal(alloc::format!("A(E_{n})"), &a_empty(&mut seq, n)?, &a);
    }
    for t in catalogue_up_to(max_n.min(8))?.into_iter().filter(Graph::is_tree) {
        for p in 0..=2 {
            let a = engine.average_colors(&t.add_isolated(p).expect("order fits"))?;
            report.equal(alloc::format!("A({t} ∪ {p}K_1)"), &a_tree_plus_isolated(&mut seq, t.order(), p)?, &a);
        }
    }
    for n in 3..=max_n.min(9) {
        for p in 0..=2 {
            let a = engine.average_colors(&Graph::cycle(n).add_isolated(p).expect("order fits"))?;
            report.equal(alloc::format!("A(C_{n} ∪ {p}K_1)"), &a_cycle_plus_isolated(&mut seq, n, p)?, &a);
        }
    }
    for r in 1..=max_n {
        for p in 0..=max_n - r {
            let g = Graph::complete(r).add_isolated(p).expect("order fits");
            let s = engine.s_vector(&g)?;
            report.verdict(
                alloc::format!("S(K_{r} ∪ {p}K_1)"),
                compare_vectors("S", &clique_plus_isolated_vector(&mut seq, r, p)?, &s),
            );
            report.equal(alloc::format!("A(K_{r} ∪ {p}K_1)"), &a_clique_plus_isolated(&mut seq, r, p)?, &s.average());
        }
    }
    for n in 1..=max_n + 2 {
        let (b, _) = engine.bt_of(&Graph::path(n).complement())?;
        let a = engine.average_colors(&Graph::path(n).complement())?;
        report.equal(alloc::format!("B(complement of P_{n})"), &b_path_complement(&mut seq, n)?, &b);
        report.equal(alloc::format!("A(complement of P_{n})"), &a_path_complement(&mut seq, n)?, &a);
    }
    for n in 4..=max_n + 2 {
        let a = engine.average_colors(&Graph::cycle(n).complement())?;
        report.equal(alloc::format!("A(complement of C_{n})"), &a_cycle_complement(&mut seq, n)?, &a);
    }
    for n in 1..=max_n {
        for r in 1..=n {
            let l1 = bound_l1(&mut seq, n)?;
            let l2 = bound_l2(&mut seq, n, r)?;
            let l3 = bound_l3(&mut seq, n, r)?;
            let star = Graph::star(r - 1).add_isolated(n - r).expect("order fits");
            report.equal(alloc::format!("L3({n},{r})"), &l3, &engine.average_colors(&star)?);
            if r >= 2 {
                report.record(l1 < l2 && l1 < l3, || alloc::format!("L1({n}) < min(L2, L3) at r = {r}"));
            }
            if r == 2 {
                report.equal(alloc::format!("L2({n},2) = L3({n},2)"), &l2, &l3);
            }
        }
    }
    Ok(report)
}

pub fn q_lemmas(engine: &mut Engine, max_total: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("q-lemmas");
    for n in 3..=max_total {
        for p in 0..=max_total - n {
            for x in 0..=p {
                report.verdict(alloc::format!("Q shift ({n}, {p}, {x})"), check_q_shift_identity(engine, n, p, x)?);
            }
            if n % 2 == 1 {
                report.verdict(alloc::format!("odd cycle ({n}, {p})"), check_odd_cycle_decomposition(engine, n, p)?);
            }
        }
    }
    let mut displayed_failures = 0;
    let mut expansions = 0;
    for n in 5..=max_total {
        for x in (5..=n).step_by(2) {
            report.verdict(alloc::format!("triangle expansion ({n}, {x})"), check_c3_expansion(engine, n, x)?);
            expansions += 1;
            if !c3_expansion_as_displayed(engine, n, x)?.holds() {
                displayed_failures += 1;
            }
        }
    }
    report.notes.push(alloc::format!(
        "coefficients C(x-3, i) - [i even]: {displayed_failures} of {expansions} expansions fail; \
         C(x-3, i+1) - [i+1 even] is used"
    ));
    Ok(report)
}

pub fn removal_theorems(engine: &mut Engine, max_n: usize, max_total: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("removal-theorems");
    let graphs = catalogue_up_to(max_n)?;
    for g in &graphs {
        for o in check_removal_theorems(engine, g)? {
            report.record(o.holds(), || {
                alloc::format!("{} on {g} at {} {:?}: {} <= {}", o.rule.name(), o.vertex, o.neighbor, o.before, o.after)
            });
        }
    }
    let mut sub = SuiteReport::new("union comparisons");
    let small = catalogue_up_to(max_total.saturating_sub(3).min(max_n))?;
    for n in 3..=max_total {
        for g in small.iter().filter(|g| g.order() + n <= max_total) {
            let c = check_cycle_beats_path(engine, g, n)?;
            sub.record(c.holds(), || c.statement.to_string());
        }
        if n >= 5 {
            for p in 0..=max_total - n {
                for c in check_q_below_cycle(engine, n, p)? {
                    sub.record(c.holds(), || c.statement.clone());
                }
            }
            for c in check_triangle_below_odd_cycles(engine, n)? {
                sub.record(c.holds(), || c.statement.clone());
            }
        }
    }
    let alone = check_cycle_beats_path(engine, &Graph::empty(0), 4)?;
    sub.notes.push(alloc::format!(
        "without G: A(P_4) = {} and A(C_4) = {}, so the comparison needs G to have a vertex",
        alone.smaller, alone.larger
    ));
    let hs = catalogue_up_to(4)?;
    let gs = catalogue_up_to(2)?;
    let mut premise_met = 0;
    for h1 in &hs {
        for h2 in &hs {
            for g in &gs {
                let out = check_cross_product(engine, h1, h2, g)?;
                if matches!(out, super::checks::CrossProductOutcome::Checked { .. }) {
                    premise_met += 1;
                    sub.record(out.holds(), || alloc::format!("cross product {h1} over {h2} with {g}"));
                }
            }
        }
    }
    sub.notes.push(alloc::format!("cross-product premise met by {premise_met} triples"));
    report.absorb(sub);
    Ok(report)
}

pub fn counterexamples(engine: &mut Engine) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("counterexamples");
    for r in check_counterexample_remarks(engine)? {
        report.record(r.holds, || r.statement.clone());
    }
    Ok(report)
}

/// `A(P_n) = B_n / B_{n-1}` and strictly increasing, `1 <= n <= max_n`.
pub fn path_averages(engine: &mut Engine, max_n: usize) -> Result<SuiteReport, LabError> {
    let mut report = SuiteReport::new("path averages");
    let mut seq = Sequences::new();
    let mut previous: Option<ExactRational> = None;
    for n in 1..=max_n {
        let a = engine.average_colors(&Graph::path(n))?;
        let expected = ExactRational::ratio(&seq.bell(n), &seq.bell(n - 1));
        report.equal(alloc::format!("A(P_{n})"), &expected, &a);
        if let Some(prev) = previous {
            report.record(prev < a, || alloc::format!("A(P_{}) < A(P_{n})", n - 1));
        }
        previous = Some(a);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let mut e = Engine::new();
        for (suite, bound) in [
            (Suite::Recurrences, 4),
            (Suite::Join, 5),
            (Suite::Union, 5),
            (Suite::ClosedForms, 7),
            (Suite::QLemmas, 7),
            (Suite::RemovalTheorems, 4),
            (Suite::Counterexamples, 0),
        ] {
            let r = run_suite(&mut e, suite, Some(bound)).unwrap();
            assert!(r.passed(), "{r}: {:?}", r.failures);
            assert!(r.checked > 0, "{r}");
        }
        assert!(path_averages(&mut e, 8).unwrap().passed());
    }
}
