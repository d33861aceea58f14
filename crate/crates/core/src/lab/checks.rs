//! Per-graph checks: the three lower bounds, strict inequalities for vertex
//! and edge removal, union comparisons and the cross-product criterion.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::LabError;
use crate::canon::GraphKey;
use crate::closed_forms::{bound_l1, bound_l2, bound_l3};
use crate::engine::Engine;
use crate::graph::{bits, Graph};
use crate::numbers::Sequences;
use crate::rational::ExactRational;

/// `K_r ∪ (n - r) K_1`.
pub fn clique_plus_isolated(r: usize, n: usize) -> Graph {
    Graph::complete(r).add_isolated(n - r).expect("order fits")
}

/// `K_{1,d} ∪ (n - d - 1) K_1`.
pub fn star_plus_isolated(d: usize, n: usize) -> Graph {
    Graph::star(d).add_isolated(n - d - 1).expect("order fits")
}

/// One graph checked against the three bounds.
///
/// Index 0 is the chromatic bound `L2(n, chi)`, 1 the degree bound
/// `L3(n, Delta + 1)`, 2 the empty-graph bound `L1(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub key: GraphKey,
    pub graph: Graph,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub delta: usize,
    pub b: BigUint,
    pub t: BigUint,
    pub a: ExactRational,
    pub l1: ExactRational,
    pub l2: ExactRational,
    pub l3: ExactRational,
    /// `A` equals the bound.
    pub equal: [bool; 3],
    /// The graph is isomorphic to the bound's extremal graph.
    pub extremal: [bool; 3],
    /// `A > bound`, or `A = bound` exactly at the extremal graph.
    pub pass: [bool; 3],
}

impl ConjectureRow {
    pub fn bounds(&self) -> [&ExactRational; 3] {
        [&self.l2, &self.l3, &self.l1]
    }

    pub fn all_pass(&self) -> bool {
        self.pass.iter().all(|&p| p)
    }
}

pub fn check_conjectures(engine: &mut Engine, seq: &mut Sequences, g: &Graph) -> Result<ConjectureRow, LabError> {
    let s = engine.s_vector(g)?;
    let n = g.order();
    let chi = engine.chromatic_number(g)?;
    let delta = g.max_degree();
    let a = s.average();
    let l1 = bound_l1(seq, n)?;
    let l2 = bound_l2(seq, n, chi)?;
    let l3 = bound_l3(seq, n, delta + 1)?;
    let key = GraphKey::of(g);
    let extremal = [
        GraphKey::of(&clique_plus_isolated(chi, n)) == key,
        GraphKey::of(&star_plus_isolated(delta, n)) == key,
        g.size() == 0,
    ];
    let bounds = [&l2, &l3, &l1];
    let equal = bounds.map(|b| &a == b);
    let mut pass = [false; 3];
    for i in 0..3 {
        pass[i] = if extremal[i] { equal[i] } else { &a > bounds[i] };
    }
    Ok(ConjectureRow {
        key,
        graph: g.clone(),
        n,
        m: g.size(),
        chi,
        delta,
        b: s.total(),
        t: s.weighted_total(),
        a,
        l1,
        l2,
        l3,
        equal,
        extremal,
        pass,
    })
}

/// Premises under which removing a vertex or an edge lowers `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RemovalRule {
    /// `chi(G[N(v)]) >= |N(v)| - 3` implies `A(G) > A(G - v)`.
    NeighborhoodChromatic,
    /// `deg(v) <= 4` implies `A(G) > A(G - v)`.
    LowDegree,
    /// `v` simplicial implies `A(G) > A(G - v)`.
    SimplicialVertex,
    /// `v` simplicial with neighbor `w` implies `A(G) > A(G - vw)`.
    SimplicialEdge,
}

impl RemovalRule {
    pub fn name(self) -> &'static str {
        match self {
            RemovalRule::NeighborhoodChromatic => "neighborhood-chromatic",
            RemovalRule::LowDegree => "low-degree",
            RemovalRule::SimplicialVertex => "simplicial-vertex",
            RemovalRule::SimplicialEdge => "simplicial-edge",
        }
    }
}

/// One premise instance and whether `before > after` held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalOutcome {
    pub rule: RemovalRule,
    pub vertex: usize,
    pub neighbor: Option<usize>,
    pub before: ExactRational,
    pub after: ExactRational,
}

impl RemovalOutcome {
    pub fn holds(&self) -> bool {
        self.before > self.after
    }
}

/// Every qualifying vertex and simplicial edge of `g`. Vertex rules need
/// `n >= 2` so that `G - v` has a vertex.
pub fn check_removal_theorems(engine: &mut Engine, g: &Graph) -> Result<Vec<RemovalOutcome>, LabError> {
    let before = engine.average_colors(g)?;
    let mut out = Vec::new();
    for v in 0..g.order() {
        let nbhd = g.neighbors(v);
        let simplicial = g.is_simplicial(v);
        if g.order() >= 2 {
            let chi_nbhd = if nbhd == 0 {
                0
            } else {
                engine.chromatic_number(&g.induced(nbhd))?
            };
            let mut rules = Vec::new();
            if chi_nbhd + 3 >= g.degree(v) {
                rules.push(RemovalRule::NeighborhoodChromatic);
            }
            if g.degree(v) <= 4 {
                rules.push(RemovalRule::LowDegree);
            }
            if simplicial {
                rules.push(RemovalRule::SimplicialVertex);
            }
            if !rules.is_empty() {
                let after = engine.average_colors(&g.remove_vertex(v).expect("v in range"))?;
                for rule in rules {
                    out.push(RemovalOutcome {
                        rule,
                        vertex: v,
                        neighbor: None,
                        before: before.clone(),
                        after: after.clone(),
                    });
                }
            }
        }
        if simplicial {
            for w in bits(nbhd) {
                let after = engine.average_colors(&g.delete_edge(v, w).expect("vw is an edge"))?;
                out.push(RemovalOutcome {
                    rule: RemovalRule::SimplicialEdge,
                    vertex: v,
                    neighbor: Some(w),
                    before: before.clone(),
                    after,
                });
            }
        }
    }
    Ok(out)
}

/// A claimed strict inequality `smaller < larger`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub statement: String,
    pub smaller: ExactRational,
    pub larger: ExactRational,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.smaller < self.larger
    }
}

fn union(g: &Graph, h: &Graph) -> Graph {
    g.disjoint_union(h).expect("order fits")
}

/// `A(G ∪ C_n) > A(G ∪ P_n)` for `n >= 3` and any `G` (possibly of order 0).
pub fn check_cycle_beats_path(engine: &mut Engine, g: &Graph, n: usize) -> Result<Comparison, LabError> {
    Ok(Comparison {
        statement: alloc::format!("A(G ∪ P_{n}) < A(G ∪ C_{n}) for G = {g}"),
        smaller: engine.average_colors(&union(g, &Graph::path(n)))?,
        larger: engine.average_colors(&union(g, &Graph::cycle(n)))?,
    })
}

/// `A(Q_i ∪ pK_1) < A(C_n ∪ pK_1)` for every `3 <= i < n`; needs `n >= 5`.
pub fn check_q_below_cycle(engine: &mut Engine, n: usize, p: usize) -> Result<Vec<Comparison>, LabError> {
    let cycle = engine.average_colors(&Graph::cycle(n).add_isolated(p).expect("order fits"))?;
    (3..n)
        .map(|i| {
            Ok(Comparison {
                statement: alloc::format!("A(Q_{i} ∪ {p}K_1) < A(C_{n} ∪ {p}K_1)"),
                smaller: engine.average_colors(&Graph::q(i).add_isolated(p).expect("order fits"))?,
                larger: cycle.clone(),
            })
        })
        .collect()
}

/// `A(C_3 ∪ (n-3)K_1) < A(C_x ∪ (n-x)K_1)` for every odd `5 <= x <= n`.
pub fn check_triangle_below_odd_cycles(engine: &mut Engine, n: usize) -> Result<Vec<Comparison>, LabError> {
    let triangle = engine.average_colors(&Graph::cycle(3).add_isolated(n - 3).expect("order fits"))?;
    (5..=n)
        .step_by(2)
        .map(|x| {
            Ok(Comparison {
                statement: alloc::format!("A(C_3 ∪ {}K_1) < A(C_{x} ∪ {}K_1)", n - 3, n - x),
                smaller: triangle.clone(),
                larger: engine.average_colors(&Graph::cycle(x).add_isolated(n - x).expect("order fits"))?,
            })
        })
        .collect()
}

/// The three union comparisons for one `(G, n, p)`: cycle against path
/// next to `G`, each `Q_i` against `C_n` with `p` isolated vertices when
/// `n >= 5`, and the triangle against odd cycles at total order `n` when
/// `n >= 5`.
pub fn check_union_comparisons(engine: &mut Engine, g: &Graph, n: usize, p: usize) -> Result<Vec<Comparison>, LabError> {
    let mut out = alloc::vec![check_cycle_beats_path(engine, g, n)?];
    if n >= 5 {
        out.extend(check_q_below_cycle(engine, n, p)?);
        out.extend(check_triangle_below_odd_cycles(engine, n)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossProductOutcome {
    /// Some `k > k'` has `S(H1,k) S(H2,k') < S(H2,k) S(H1,k')`, or no pair is
    /// strict; nothing is asserted.
    PremiseNotMet,
    /// The premise holds; `holds()` tells whether `A(G ∪ H1) > A(G ∪ H2)`.
    Checked {
        with_h1: ExactRational,
        with_h2: ExactRational,
    },
}

impl CrossProductOutcome {
    /// `false` only when the premise holds and the inequality does not.
    pub fn holds(&self) -> bool {
        match self {
            CrossProductOutcome::PremiseNotMet => true,
            CrossProductOutcome::Checked { with_h1, with_h2 } => with_h1 > with_h2,
        }
    }
}

/// Tests the premise `S(H1,k) S(H2,k') >= S(H2,k) S(H1,k')` for all
/// `k > k'`, strict at least once, and if it holds compares `A(G ∪ H1)` with
/// `A(G ∪ H2)`.
pub fn check_cross_product(engine: &mut Engine, h1: &Graph, h2: &Graph, g: &Graph) -> Result<CrossProductOutcome, LabError> {
    let s1 = engine.s_vector(h1)?;
    let s2 = engine.s_vector(h2)?;
    let top = h1.order().max(h2.order());
    let mut strict = false;
    for k in 1..=top {
        for k2 in 1..k {
            let left = s1.get(k) * s2.get(k2);
            let right = s2.get(k) * s1.get(k2);
            if left < right {
                return Ok(CrossProductOutcome::PremiseNotMet);
            }
            strict |= left > right;
        }
    }
    if !strict {
        return Ok(CrossProductOutcome::PremiseNotMet);
    }
    Ok(CrossProductOutcome::Checked {
        with_h1: engine.average_colors(&union(g, h1))?,
        with_h2: engine.average_colors(&union(g, h2))?,
    })
}

/// A named fact about specific graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remark {
    pub statement: String,
    pub holds: bool,
}

/// The examples showing the bounds cannot be reached by simple means:
/// every edge deletion from `K_{2,4}` raises `A`, and adding `K_1` to both
/// `K_{2,3}` and `K_3 ∪ 2K_1` reverses their order. The quoted three-decimal
/// values are checked as well.
pub fn check_counterexample_remarks(engine: &mut Engine) -> Result<Vec<Remark>, LabError> {
    let mut out = Vec::new();
    let k24 = Graph::complete_bipartite(2, 4);
    let a_k24 = engine.average_colors(&k24)?;
    for (u, v) in k24.edges() {
        let after = engine.average_colors(&k24.delete_edge(u, v).expect("edge"))?;
        out.push(Remark {
            statement: alloc::format!("A(K_2,4 - {u}{v}) = {after} > {a_k24} = A(K_2,4)"),
            holds: after > a_k24,
        });
    }
    let g1 = Graph::complete_bipartite(2, 3);
    let g2 = clique_plus_isolated(3, 5);
    let a1 = engine.average_colors(&g1)?;
    let a2 = engine.average_colors(&g2)?;
    let a1k = engine.average_colors(&g1.add_isolated(1).expect("order fits"))?;
    let a2k = engine.average_colors(&g2.add_isolated(1).expect("order fits"))?;
    let seven_halves = ExactRational::new(7.into(), 2.into()).expect("nonzero");
    out.push(Remark {
        statement: alloc::format!("A(K_2,3) = {a1} = 7/2"),
        holds: a1 == seven_halves,
    });
    out.push(Remark {
        statement: alloc::format!("A(K_2,3) = {a1} < {a2} = A(K_3 ∪ 2K_1)"),
        holds: a1 < a2,
    });
    out.push(Remark {
        statement: alloc::format!("A(K_2,3 ∪ K_1) = {a1k} > {a2k} = A(K_3 ∪ 3K_1)"),
        holds: a1k > a2k,
    });
    for (value, expected) in [(&a1, "3.5"), (&a2, "3.529"), (&a1k, "3.867"), (&a2k, "3.831")] {
        let places = expected.len() - 2;
        out.push(Remark {
            statement: alloc::format!("{value} rounds to {expected}"),
            holds: value.to_decimal(places) == expected,
        });
    }
    Ok(out)
}
