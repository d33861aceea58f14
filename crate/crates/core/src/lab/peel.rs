//! Reducing a chordal graph by removing edges at simplicial vertices.
//!
//! Removing an edge `vw` where `v` is simplicial keeps the graph chordal and
//! strictly lowers `A`, so each peel is a strictly decreasing chain of
//! averages ending at an extremal graph.

use alloc::vec::Vec;

use super::checks::{clique_plus_isolated, star_plus_isolated};
use super::LabError;
use crate::canon::GraphKey;
use crate::engine::Engine;
use crate::graph::{bit, bits, Graph};
use crate::rational::ExactRational;

/// A graph along a peel and the edge removed to reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    pub removed: Option<(usize, usize)>,
    pub graph: Graph,
    pub a: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelTrace {
    /// The first step is the input graph with `removed = None`.
    pub steps: Vec<PeelStep>,
    /// The last graph is isomorphic to the expected end graph.
    pub reached_target: bool,
}

impl PeelTrace {
    pub fn edges_removed(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].a > w[1].a)
    }

    pub fn last(&self) -> &PeelStep {
        self.steps.last().expect("trace starts with the input")
    }

    pub fn holds(&self) -> bool {
        self.reached_target && self.strictly_decreasing()
    }
}

/// Both peels of one chordal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalPeel {
    /// Ends at `K_chi ∪ (n - chi) K_1`.
    pub to_clique: PeelTrace,
    /// Ends at `K_{1,Delta} ∪ (n - Delta - 1) K_1`.
    pub to_star: PeelTrace,
}

impl ChordalPeel {
    pub fn holds(&self) -> bool {
        self.to_clique.holds() && self.to_star.holds()
    }
}

/// A maximum clique of a chordal graph: the largest set formed by a vertex
/// and its neighbors later in a perfect elimination order.
fn maximum_clique(g: &Graph, order: &[usize]) -> u64 {
    let mut position = alloc::vec![0usize; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbors(v)).filter(|&u| position[u] > position[v]).fold(bit(v), |m, u| m | bit(u)))
        .max_by_key(|m| m.count_ones())
        .unwrap_or(0)
}

struct Tracer<'e> {
    engine: &'e mut Engine,
    steps: Vec<PeelStep>,
}

impl Tracer<'_> {
    fn current(&self) -> &Graph {
        &self.steps.last().expect("started").graph
    }

    fn remove(&mut self, v: usize, w: usize) -> Result<(), LabError> {
        let next = self.current().delete_edge(v, w).expect("edge present");
        let a = self.engine.average_colors(&next)?;
        self.steps.push(PeelStep {
            removed: Some((v.min(w), v.max(w))),
            graph: next,
            a,
        });
        Ok(())
    }

    fn finish(self, target: &Graph) -> PeelTrace {
        let reached_target = GraphKey::of(self.current()) == GraphKey::of(target);
        PeelTrace {
            steps: self.steps,
            reached_target,
        }
    }
}

fn start<'e>(engine: &'e mut Engine, g: &Graph) -> Result<Tracer<'e>, LabError> {
    let a = engine.average_colors(g)?;
    Ok(Tracer {
        engine,
        steps: alloc::vec![PeelStep {
            removed: None,
            graph: g.clone(),
            a,
        }],
    })
}

/// Keeps a maximum clique `K` and repeatedly removes the lowest edge at the
/// lowest simplicial vertex outside `K` that still has a neighbor.
fn peel_to_clique(engine: &mut Engine, g: &Graph, order: &[usize]) -> Result<PeelTrace, LabError> {
    let clique = maximum_clique(g, order);
    let mut tracer = start(engine, g)?;
    loop {
        let h = tracer.current();
        let next = (0..h.order())
            .filter(|&v| clique & bit(v) == 0 && h.degree(v) > 0 && h.is_simplicial(v))
            .map(|v| (v, h.neighbors(v).trailing_zeros() as usize))
            .next();
        match next {
            Some((v, w)) => tracer.remove(v, w)?,
            None => break,
        }
    }
    let chi = clique.count_ones() as usize;
    Ok(tracer.finish(&clique_plus_isolated(chi, g.order())))
}

/// Fixes the lowest vertex `v` of maximum degree. While some vertex other
/// than a pendant of `v` or an isolated vertex remains, picks the lowest
/// simplicial `w != v` of the subgraph induced by those vertices and `v`,
/// then strips `w` down to the edge `wv` if `w` is a neighbor of `v`, or
/// isolates it otherwise.
fn peel_to_star(engine: &mut Engine, g: &Graph) -> Result<PeelTrace, LabError> {
    let delta = g.max_degree();
    let n = g.order();
    let Some(v) = (0..n).find(|&u| g.degree(u) == delta) else {
        return Ok(start(engine, g)?.finish(g));
    };
    let mut tracer = start(engine, g)?;
    loop {
        let h = tracer.current().clone();
        let nbhd = h.neighbors(v);
        let settled = (0..n)
            .filter(|&u| u == v || h.degree(u) == 0 || (nbhd & bit(u) != 0 && h.degree(u) == 1))
            .fold(0u64, |m, u| m | bit(u));
        let rest = h.vertex_mask() & !settled;
        if rest == 0 {
            break;
        }
        let sub_vertices: Vec<usize> = bits(rest | bit(v)).collect();
        let sub = h.induced(rest | bit(v));
        let w = sub_vertices
            .iter()
            .enumerate()
            .find(|&(i, &u)| u != v && sub.is_simplicial(i))
            .map(|(_, &u)| u)
            .expect("a chordal graph that is not a clique has two non-adjacent simplicial vertices");
        debug_assert!(h.is_simplicial(w), "pendants of v and isolated vertices are not adjacent to w");
        for u in bits(h.neighbors(w) & !bit(v)) {
            tracer.remove(w, u)?;
        }
    }
    Ok(tracer.finish(&star_plus_isolated(delta, n)))
}

/// Both peels of a chordal graph. Each removal is at a simplicial vertex, so
/// the averages must strictly decrease.
pub fn peel_chordal(engine: &mut Engine, g: &Graph) -> Result<ChordalPeel, LabError> {
    let order = g.perfect_elimination_order().ok_or(LabError::NotChordal)?;
    Ok(ChordalPeel {
        to_clique: peel_to_clique(engine, g, &order)?,
        to_star: peel_to_star(engine, g)?,
    })
}
