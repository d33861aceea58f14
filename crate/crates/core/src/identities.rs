//! Exact identity checks relating counts of different graphs.
//!
//! Each check evaluates both sides independently and returns a [`Verdict`];
//! on failure it names the quantity, the first failing `k` if any, and both
//! values.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::engine::{ColorCountVector, Engine, EngineError};
use crate::graph::{bit, bits, Graph};
use crate::oracle::refined_counts;

/// First disagreement found by a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub quantity: &'static str,
    pub k: Option<usize>,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{} at k = {}: {} != {}", self.quantity, k, self.left, self.right),
            None => write!(f, "{}: {} != {}", self.quantity, self.left, self.right),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Mismatch),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    /// Compares two values of one quantity.
    pub fn compare<T: PartialEq + ToString>(quantity: &'static str, left: &T, right: &T) -> Self {
        if left == right {
            Verdict::Holds
        } else {
            Verdict::Fails(Mismatch {
                quantity,
                k: None,
                left: left.to_string(),
                right: right.to_string(),
            })
        }
    }

    /// `self` if it fails, otherwise the verdict computed by `next`.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds() {
            next()
        } else {
            self
        }
    }
}

/// Entrywise comparison of two vectors, `k = 1..=max(len)`.
pub fn compare_vectors(quantity: &'static str, left: &ColorCountVector, right: &ColorCountVector) -> Verdict {
    let top = left.order().max(right.order());
    for k in 1..=top {
        let (l, r) = (left.get(k), right.get(k));
        if l != r {
            return Verdict::Fails(Mismatch {
                quantity,
                k: Some(k),
                left: l.to_string(),
                right: r.to_string(),
            });
        }
    }
    Verdict::Holds
}

fn add_vectors(a: &ColorCountVector, b: &ColorCountVector) -> ColorCountVector {
    let top = a.order().max(b.order());
    ColorCountVector::from_counts((1..=top).map(|k| a.get(k) + b.get(k)).collect())
}

/// `S(G, k) = S(G - uv, k) - S(G|uv, k)` for an edge `uv`, checked as
/// `S(G, k) + S(G|uv, k) = S(G - uv, k)`.
pub fn check_deletion(engine: &mut Engine, g: &Graph, u: usize, v: usize) -> Result<Verdict, EngineError> {
    let without = g.delete_edge(u, v).expect("uv is an edge");
    let merged = without.contract(u, v).expect("u != v");
    let lhs = add_vectors(&engine.s_vector(g)?, &engine.s_vector(&merged)?);
    Ok(compare_vectors("S(G) + S(G|uv) vs S(G-uv)", &lhs, &engine.s_vector(&without)?))
}

/// `S(G, k) = S(G + uv, k) + S(G|uv, k)` for a non-edge `uv`.
pub fn check_addition(engine: &mut Engine, g: &Graph, u: usize, v: usize) -> Result<Verdict, EngineError> {
    let with = g.add_edge(u, v).expect("uv is a non-edge");
    let merged = g.contract(u, v).expect("u != v");
    let rhs = add_vectors(&engine.s_vector(&with)?, &engine.s_vector(&merged)?);
    Ok(compare_vectors("S(G) vs S(G+uv) + S(G|uv)", &engine.s_vector(g)?, &rhs))
}

/// For the join `G1 + G2`: `B` multiplies, `T(G1+G2) = T1 B2 + B1 T2`, and
/// `A` adds.
pub fn check_join(engine: &mut Engine, g1: &Graph, g2: &Graph) -> Result<Verdict, EngineError> {
    let join = g1.join(g2).map_err(|_| EngineError::OrderAboveLimit {
        order: g1.order() + g2.order(),
        limit: engine.limit(),
    })?;
    let (b1, t1) = engine.bt_of(g1)?;
    let (b2, t2) = engine.bt_of(g2)?;
    let (b, t) = engine.bt_of(&join)?;
    let a = engine.average_colors(&join)?;
    let a_sum = engine.average_colors(g1)? + engine.average_colors(g2)?;
    Ok(Verdict::compare("B(G1+G2) vs B1 B2", &b, &(&b1 * &b2))
        .and_then(|| Verdict::compare("T(G1+G2) vs T1 B2 + B1 T2", &t, &(&t1 * &b2 + &b1 * &t2)))
        .and_then(|| Verdict::compare("A(G1+G2) vs A1 + A2", &a, &a_sum)))
}

/// `A(G) = A(G - v) + 1` for a dominant vertex `v` (`n >= 2`).
pub fn check_dominant_vertex(engine: &mut Engine, g: &Graph, v: usize) -> Result<Verdict, EngineError> {
    assert_eq!(g.degree(v) + 1, g.order(), "v must be adjacent to every other vertex");
    let a = engine.average_colors(g)?;
    let rest = engine.average_colors(&g.remove_vertex(v).expect("v in range"))?;
    Ok(Verdict::compare("A(G) vs A(G-v) + 1", &a, &(rest + crate::rational::ExactRational::from_integer(1))))
}

/// Neighborhood of `v` in `G` expressed in the labels of `G - v`.
fn neighborhood_after_removal(g: &Graph, v: usize) -> u64 {
    bits(g.neighbors(v)).fold(0, |m, u| m | bit(if u > v { u - 1 } else { u }))
}

/// Adding a vertex `v` with neighborhood `N(v)` to `G - v`:
///
/// ```text
/// B(G) = B(G-v) + sum_k sum_i (k - i)        S_{N(v),i}(G-v, k)
/// T(G) = T(G-v) + sum_k sum_i (k(k - i) + 1) S_{N(v),i}(G-v, k)
/// ```
///
/// The refined counts come from enumeration; `B` and `T` from the engine.
/// Needs `n >= 2`.
pub fn check_add_node(engine: &mut Engine, g: &Graph, v: usize) -> Result<Verdict, EngineError> {
    let rest = g.remove_vertex(v).expect("v in range");
    let refined = refined_counts(&rest, neighborhood_after_removal(g, v))?;
    let (b_rest, t_rest) = engine.bt_of(&rest)?;
    let (b, t) = engine.bt_of(g)?;
    let mut b_extra = BigUint::zero();
    let mut t_extra = BigUint::zero();
    for (k, i, count) in refined.entries() {
        if k == 0 {
            continue;
        }
        b_extra += count * (k - i);
        t_extra += count * (k * (k - i) + 1);
    }
    Ok(Verdict::compare("B(G) vs B(G-v) + added colorings", &b, &(b_rest + b_extra))
        .and_then(|| Verdict::compare("T(G) vs T(G-v) + added blocks", &t, &(t_rest + t_extra))))
}

/// `B(G ∪ H) = sum_k S(H, k) B(G ∪ K_k)` and the same with `T`.
pub fn check_union_clique_expansion(engine: &mut Engine, g: &Graph, h: &Graph) -> Result<Verdict, EngineError> {
    let too_big = |e: &Engine| EngineError::OrderAboveLimit {
        order: g.order() + h.order(),
        limit: e.limit(),
    };
    let union = g.disjoint_union(h).map_err(|_| too_big(engine))?;
    let (b, t) = engine.bt_of(&union)?;
    let s_h = engine.s_vector(h)?;
    let mut b_sum = BigUint::zero();
    let mut t_sum = BigUint::zero();
    for k in 1..=h.order() {
        let s = s_h.get(k);
        if s.is_zero() {
            continue;
        }
        let with_clique = g.disjoint_union(&Graph::complete(k)).map_err(|_| too_big(engine))?;
        let (bk, tk) = engine.bt_of(&with_clique)?;
        b_sum += &s * bk;
        t_sum += s * tk;
    }
    Ok(Verdict::compare("B(G∪H) vs sum S(H,k) B(G∪K_k)", &b, &b_sum)
        .and_then(|| Verdict::compare("T(G∪H) vs sum S(H,k) T(G∪K_k)", &t, &t_sum)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrences_on_small_graphs() {
        let mut e = Engine::new();
        let g: Graph = "5; 0-1,1-2,2-3,3-0,0-4".parse().unwrap();
        for (u, v) in g.edges() {
            assert!(check_deletion(&mut e, &g, u, v).unwrap().holds());
        }
        for (u, v) in g.non_edges() {
            assert!(check_addition(&mut e, &g, u, v).unwrap().holds());
        }
    }

    #[test]
    fn join_and_dominant_vertex() {
        let mut e = Engine::new();
        assert!(check_join(&mut e, &Graph::cycle(5), &Graph::path(3)).unwrap().holds());
        assert!(check_join(&mut e, &Graph::empty(1), &Graph::empty(2)).unwrap().holds());
        let wheel = Graph::cycle(5).join(&Graph::empty(1)).unwrap();
        assert!(check_dominant_vertex(&mut e, &wheel, 5).unwrap().holds());
    }

    #[test]
    fn add_node_on_path_endpoint() {
        let mut e = Engine::new();
        let p4 = Graph::path(4);
        for v in 0..4 {
            assert!(check_add_node(&mut e, &p4, v).unwrap().holds());
        }
        assert_eq!(neighborhood_after_removal(&p4, 1), 0b11);
    }

    #[test]
    fn union_clique_expansion() {
        let mut e = Engine::new();
        assert!(check_union_clique_expansion(&mut e, &Graph::path(3), &Graph::cycle(4)).unwrap().holds());
        assert!(check_union_clique_expansion(&mut e, &Graph::empty(1), &Graph::empty(3)).unwrap().holds());
    }

    #[test]
    fn mismatch_reports_first_k() {
        let a = ColorCountVector::from_counts([1u32, 3, 1].map(BigUint::from).to_vec());
        let b = ColorCountVector::from_counts([1u32, 2, 1].map(BigUint::from).to_vec());
        match compare_vectors("S", &a, &b) {
            Verdict::Fails(m) => {
                assert_eq!(m.k, Some(2));
                assert_eq!(m.to_string(), "S at k = 2: 3 != 2");
            }
            Verdict::Holds => panic!("vectors differ"),
        }
    }
}
