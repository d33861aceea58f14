//! Exact closed forms for `A`, `B` and `S` on graph families, the lower
//! bounds `L1`, `L2`, `L3`, and identities expressing counts on a union with
//! isolated vertices through the triangle-ended paths `Q_n`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::engine::{ColorCountVector, Engine, EngineError};
use crate::graph::Graph;
use crate::identities::{compare_vectors, Mismatch, Verdict};
use crate::numbers::Sequences;
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{what} requires {requirement}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
    },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn require(ok: bool, what: &'static str, requirement: &'static str) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::Domain { what, requirement })
    }
}

/// `A(E_n) = (B_{n+1} - B_n) / B_n`, `n >= 1`.
pub fn a_empty(seq: &mut Sequences, n: usize) -> Result<ExactRational, FormulaError> {
    require(n >= 1, "a_empty", "n >= 1")?;
    let b = seq.bell(n);
    Ok(ExactRational::ratio(&(seq.bell(n + 1) - &b), &b))
}

/// `sum_{i=0}^{p} C(p, i) B_{m+i}`.
fn binomial_bell_sum(seq: &mut Sequences, m: usize, p: usize) -> BigUint {
    (0..=p).map(|i| seq.binomial(p, i) * seq.bell(m + i)).sum()
}

/// `A(T ∪ pK_1)` for any tree `T` of order `n >= 1`:
/// `sum C(p,i) B_{n+i} / sum C(p,i) B_{n+i-1}`.
pub fn a_tree_plus_isolated(seq: &mut Sequences, n: usize, p: usize) -> Result<ExactRational, FormulaError> {
    require(n >= 1, "a_tree_plus_isolated", "a tree of order n >= 1")?;
    let num = binomial_bell_sum(seq, n, p);
    let den = binomial_bell_sum(seq, n - 1, p);
    Ok(ExactRational::ratio(&num, &den))
}

/// `A(C_n ∪ pK_1)` as the ratio of the alternating sums
/// `sum_{j=1}^{n-1} (-1)^{j+1} sum_i C(p,i) B_{n+i-j+1}` over the same with
/// `B_{n+i-j}`, `n >= 3`.
pub fn a_cycle_plus_isolated(seq: &mut Sequences, n: usize, p: usize) -> Result<ExactRational, FormulaError> {
    require(n >= 3, "a_cycle_plus_isolated", "a cycle length n >= 3")?;
    let mut num = BigInt::zero();
    let mut den = BigInt::zero();
    for j in 1..n {
        let top = BigInt::from_biguint(Sign::Plus, binomial_bell_sum(seq, n - j + 1, p));
        let bottom = BigInt::from_biguint(Sign::Plus, binomial_bell_sum(seq, n - j, p));
        if j % 2 == 1 {
            num += top;
            den += bottom;
        } else {
            num -= top;
            den -= bottom;
        }
    }
    assert!(num.is_positive() && den.is_positive(), "alternating sums are positive");
    Ok(ExactRational::new(num, den).expect("positive denominator"))
}

/// `S(K_n ∪ pK_1, k) = sum_{j=0}^{n} C(k-j, n-j) C(n, j) (n-j)! {p, k-j}`
/// for `n <= k <= n + p`.
pub fn s_clique_plus_isolated(seq: &mut Sequences, n: usize, p: usize, k: usize) -> Result<BigUint, FormulaError> {
    require(n >= 1, "s_clique_plus_isolated", "a clique of order n >= 1")?;
    require(n <= k && k <= n + p, "s_clique_plus_isolated", "n <= k <= n + p")?;
    Ok((0..=n)
        .map(|j| {
            seq.binomial(k - j, n - j) * seq.binomial(n, j) * seq.factorial(n - j) * seq.stirling2(p, k - j)
        })
        .sum())
}

/// The whole vector `S(K_n ∪ pK_1, 1..=n+p)`.
pub fn clique_plus_isolated_vector(seq: &mut Sequences, n: usize, p: usize) -> Result<ColorCountVector, FormulaError> {
    require(n >= 1, "clique_plus_isolated_vector", "a clique of order n >= 1")?;
    let counts = (1..=n + p)
        .map(|k| if k < n { Ok(BigUint::zero()) } else { s_clique_plus_isolated(seq, n, p, k) })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ColorCountVector::from_counts(counts))
}

/// `A(K_n ∪ pK_1)`, `n >= 1`.
pub fn a_clique_plus_isolated(seq: &mut Sequences, n: usize, p: usize) -> Result<ExactRational, FormulaError> {
    Ok(clique_plus_isolated_vector(seq, n, p)?.average())
}

/// S-vector of a disjoint union from the operands' vectors:
///
/// ```text
/// S(G1 ∪ G2, k) = sum_{i=1}^{k} sum_{j=0}^{i} C(i,j) C(k-j, i-j) (i-j)! S(G1,i) S(G2,k-j)
/// ```
///
/// `j` counts the colors shared by both parts.
pub fn s_union(seq: &mut Sequences, s1: &ColorCountVector, s2: &ColorCountVector) -> ColorCountVector {
    let total = s1.order() + s2.order();
    let counts = (1..=total)
        .map(|k| {
            let mut sum = BigUint::zero();
            for i in 1..=k.min(s1.order()) {
                let a = s1.get(i);
                if a.is_zero() {
                    continue;
                }
                for j in 0..=i {
                    let b = s2.get(k - j);
                    if b.is_zero() {
                        continue;
                    }
                    sum += seq.binomial(i, j) * seq.binomial(k - j, i - j) * seq.factorial(i - j) * &a * b;
                }
            }
            sum
        })
        .collect();
    ColorCountVector::from_counts(counts)
}

/// `A(complement of P_n) = ((n+1) F_{n+2} + (2n-1) F_{n+1}) / (5 F_{n+1})`.
pub fn a_path_complement(seq: &mut Sequences, n: usize) -> Result<ExactRational, FormulaError> {
    require(n >= 1, "a_path_complement", "n >= 1")?;
    let num = seq.fibonacci(n + 2) * (n + 1) + seq.fibonacci(n + 1) * (2 * n - 1);
    Ok(ExactRational::ratio(&num, &(seq.fibonacci(n + 1) * 5u32)))
}

/// `B(complement of P_n) = F_{n+1}`.
pub fn b_path_complement(seq: &mut Sequences, n: usize) -> Result<BigUint, FormulaError> {
    require(n >= 1, "b_path_complement", "n >= 1")?;
    Ok(seq.fibonacci(n + 1))
}

/// `A(complement of C_n) = n F_{n+1} / L_n`, `n >= 4`.
pub fn a_cycle_complement(seq: &mut Sequences, n: usize) -> Result<ExactRational, FormulaError> {
    require(n >= 4, "a_cycle_complement", "n >= 4")?;
    Ok(ExactRational::ratio(&(seq.fibonacci(n + 1) * n), &seq.lucas(n)))
}

/// `L1(n) = A(E_n)`.
pub fn bound_l1(seq: &mut Sequences, n: usize) -> Result<ExactRational, FormulaError> {
    a_empty(seq, n)
}

/// `L2(n, r) = A(K_r ∪ (n-r) K_1)`.
pub fn bound_l2(seq: &mut Sequences, n: usize, r: usize) -> Result<ExactRational, FormulaError> {
    require(1 <= r && r <= n, "bound_l2", "1 <= r <= n")?;
    a_clique_plus_isolated(seq, r, n - r)
}

/// `L3(n, r) = A(K_{1,r-1} ∪ (n-r) K_1)`; the star is a tree of order `r`.
pub fn bound_l3(seq: &mut Sequences, n: usize, r: usize) -> Result<ExactRational, FormulaError> {
    require(1 <= r && r <= n, "bound_l3", "1 <= r <= n")?;
    a_tree_plus_isolated(seq, r, n - r)
}

/// The three bounds for one `(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTriple {
    pub n: usize,
    pub r: usize,
    pub l1: ExactRational,
    pub l2: ExactRational,
    pub l3: ExactRational,
}

impl BoundTriple {
    pub fn new(seq: &mut Sequences, n: usize, r: usize) -> Result<Self, FormulaError> {
        Ok(BoundTriple {
            n,
            r,
            l1: bound_l1(seq, n)?,
            l2: bound_l2(seq, n, r)?,
            l3: bound_l3(seq, n, r)?,
        })
    }
}

fn q_plus(n: usize, p: usize) -> Graph {
    Graph::q(n).add_isolated(p).expect("order fits")
}

fn weighted(terms: &[(BigUint, ColorCountVector)]) -> ColorCountVector {
    let top = terms.iter().map(|(_, v)| v.order()).max().unwrap_or(0);
    ColorCountVector::from_counts(
        (1..=top)
            .map(|k| terms.iter().map(|(c, v)| c * v.get(k)).sum())
            .collect(),
    )
}

/// `S(Q_n ∪ pK_1, k) = sum_{i=0}^{x} C(x, i) S(Q_{n+i} ∪ (p-x) K_1, k)` for
/// every `k`, with `n >= 3` and `0 <= x <= p`.
pub fn check_q_shift_identity(engine: &mut Engine, n: usize, p: usize, x: usize) -> Result<Verdict, FormulaError> {
    require(n >= 3 && x <= p, "check_q_shift_identity", "n >= 3 and 0 <= x <= p")?;
    let mut seq = Sequences::new();
    let lhs = engine.s_vector(&q_plus(n, p))?;
    let mut terms = Vec::new();
    for i in 0..=x {
        terms.push((seq.binomial(x, i), engine.s_vector(&q_plus(n + i, p - x))?));
    }
    Ok(compare_vectors("S(Q_n ∪ pK1) vs shifted sum", &lhs, &weighted(&terms)))
}

/// `S(C_n ∪ pK_1, k) = sum_{i=0}^{(n-3)/2} S(Q_{2i+3} ∪ pK_1, k)` for odd
/// `n >= 3`.
pub fn check_odd_cycle_decomposition(engine: &mut Engine, n: usize, p: usize) -> Result<Verdict, FormulaError> {
    require(n >= 3 && n % 2 == 1, "check_odd_cycle_decomposition", "an odd cycle length n >= 3")?;
    let lhs = engine.s_vector(&Graph::cycle(n).add_isolated(p).expect("order fits"))?;
    let mut terms = Vec::new();
    for i in 0..=(n - 3) / 2 {
        terms.push((BigUint::one(), engine.s_vector(&q_plus(2 * i + 3, p))?));
    }
    Ok(compare_vectors("S(C_n ∪ pK1) vs sum of Q", &lhs, &weighted(&terms)))
}

/// Coefficient of `S(Q_{i+4} ∪ (n-x) K_1)` in the triangle expansion:
/// `C(x-3, i+1) - [i+1 even]`. Expanding `Q_3` over `Q_3 .. Q_x` and removing
/// the unit coefficients of `Q_3, Q_5, .., Q_x` that make up `C_x` leaves
/// these on `Q_4 .. Q_{x-1}`.
pub fn c3_expansion_coefficient(seq: &mut Sequences, x: usize, i: usize) -> BigInt {
    let c = BigInt::from_biguint(Sign::Plus, seq.binomial(x - 3, i + 1));
    if (i + 1).is_multiple_of(2) {
        c - 1
    } else {
        c
    }
}

/// The coefficient written as `C(x-3, i) - [i even]`, which is off by one in
/// `i`. Kept so the discrepancy stays documented by a failing check.
pub fn c3_expansion_coefficient_as_displayed(seq: &mut Sequences, x: usize, i: usize) -> BigInt {
    let c = BigInt::from_biguint(Sign::Plus, seq.binomial(x - 3, i));
    if i.is_multiple_of(2) {
        c - 1
    } else {
        c
    }
}

fn c3_expansion_with(
    engine: &mut Engine,
    n: usize,
    x: usize,
    coefficient: fn(&mut Sequences, usize, usize) -> BigInt,
) -> Result<Verdict, FormulaError> {
    require(x % 2 == 1 && 5 <= x && x <= n, "check_c3_expansion", "odd x with 5 <= x <= n")?;
    let mut seq = Sequences::new();
    let lhs = engine.s_vector(&Graph::cycle(3).add_isolated(n - 3).expect("order fits"))?;
    let mut rhs: Vec<BigInt> = Vec::new();
    let accumulate = |rhs: &mut Vec<BigInt>, c: &BigInt, v: &ColorCountVector| {
        if rhs.len() < v.order() {
            rhs.resize(v.order(), BigInt::zero());
        }
        for (k, slot) in rhs.iter_mut().enumerate() {
            *slot += c * BigInt::from_biguint(Sign::Plus, v.get(k + 1));
        }
    };
    let cycle = engine.s_vector(&Graph::cycle(x).add_isolated(n - x).expect("order fits"))?;
    accumulate(&mut rhs, &BigInt::one(), &cycle);
    for i in 0..=x - 5 {
        let alpha = coefficient(&mut seq, x, i);
        if alpha.is_negative() {
            return Ok(Verdict::Fails(Mismatch {
                quantity: "nonnegative coefficient",
                k: None,
                left: alloc::format!("alpha_{i}"),
                right: alloc::format!("{alpha}"),
            }));
        }
        accumulate(&mut rhs, &alpha, &engine.s_vector(&q_plus(i + 4, n - x))?);
    }
    for k in 1..=lhs.order().max(rhs.len()) {
        let l = BigInt::from_biguint(Sign::Plus, lhs.get(k));
        let r = rhs.get(k - 1).cloned().unwrap_or_default();
        if l != r {
            return Ok(Verdict::Fails(Mismatch {
                quantity: "S(C_3 ∪ (n-3)K1) vs C_x expansion",
                k: Some(k),
                left: alloc::format!("{l}"),
                right: alloc::format!("{r}"),
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// `S(C_3 ∪ (n-3)K_1, k) = S(C_x ∪ (n-x)K_1, k) + sum_{i=0}^{x-5} alpha_i
/// S(Q_{i+4} ∪ (n-x)K_1, k)` with `alpha_i` from
/// [`c3_expansion_coefficient`], all `alpha_i >= 0`; odd `x`, `5 <= x <= n`.
pub fn check_c3_expansion(engine: &mut Engine, n: usize, x: usize) -> Result<Verdict, FormulaError> {
    c3_expansion_with(engine, n, x, c3_expansion_coefficient)
}

/// Same expansion with [`c3_expansion_coefficient_as_displayed`].
pub fn c3_expansion_as_displayed(engine: &mut Engine, n: usize, x: usize) -> Result<Verdict, FormulaError> {
    c3_expansion_with(engine, n, x, c3_expansion_coefficient_as_displayed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> ExactRational {
        ExactRational::new(p.into(), d.into()).unwrap()
    }

    #[test]
    fn family_values() {
        let mut s = Sequences::new();
        assert_eq!(a_empty(&mut s, 1).unwrap(), q(1, 1));
        assert_eq!(a_empty(&mut s, 2).unwrap(), q(3, 2));
        assert!(a_empty(&mut s, 0).is_err());
        assert_eq!(a_tree_plus_isolated(&mut s, 1, 0).unwrap(), q(1, 1));
        assert_eq!(a_tree_plus_isolated(&mut s, 3, 0).unwrap(), q(5, 2));
        assert_eq!(a_cycle_plus_isolated(&mut s, 3, 0).unwrap(), q(3, 1));
        assert_eq!(a_cycle_plus_isolated(&mut s, 5, 0).unwrap(), q(40, 11));
        assert!(a_cycle_plus_isolated(&mut s, 2, 0).is_err());
        assert_eq!(a_clique_plus_isolated(&mut s, 4, 0).unwrap(), q(4, 1));
        assert_eq!(a_clique_plus_isolated(&mut s, 3, 2).unwrap(), q(60, 17));
        assert_eq!(a_clique_plus_isolated(&mut s, 3, 2).unwrap().to_decimal(3), "3.529");
        assert_eq!(a_clique_plus_isolated(&mut s, 2, 3).unwrap(), q(114, 37));
        assert!(s_clique_plus_isolated(&mut s, 3, 2, 6).is_err());
        assert_eq!(a_path_complement(&mut s, 1).unwrap(), q(1, 1));
        assert_eq!(a_path_complement(&mut s, 5).unwrap(), q(15, 4));
        assert_eq!(b_path_complement(&mut s, 5).unwrap(), BigUint::from(8u32));
        assert_eq!(a_cycle_complement(&mut s, 4).unwrap(), q(20, 7));
        assert_eq!(a_cycle_complement(&mut s, 5).unwrap(), q(40, 11));
        assert!(a_cycle_complement(&mut s, 3).is_err());
    }

    #[test]
    fn bounds() {
        let mut s = Sequences::new();
        assert_eq!(bound_l1(&mut s, 3).unwrap(), q(2, 1));
        for n in 2..=12 {
            assert_eq!(bound_l2(&mut s, n, 2).unwrap(), bound_l3(&mut s, n, 2).unwrap());
        }
        assert!(bound_l2(&mut s, 3, 4).is_err());
        assert!(bound_l3(&mut s, 3, 0).is_err());
        let t = BoundTriple::new(&mut s, 7, 4).unwrap();
        assert!(t.l1 < t.l2 && t.l1 < t.l3);
    }

    #[test]
    fn union_of_vectors() {
        let mut s = Sequences::new();
        let mut e = Engine::new();
        let k1 = e.s_vector(&Graph::empty(1)).unwrap();
        let e2 = s_union(&mut s, &k1, &k1);
        assert_eq!(e2, e.s_vector(&Graph::empty(2)).unwrap());
        let c5 = e.s_vector(&Graph::cycle(5)).unwrap();
        let p3 = e.s_vector(&Graph::path(3)).unwrap();
        let both = Graph::cycle(5).disjoint_union(&Graph::path(3)).unwrap();
        assert_eq!(s_union(&mut s, &c5, &p3), e.s_vector(&both).unwrap());
    }

    #[test]
    fn q_identities() {
        let mut e = Engine::new();
        assert!(check_q_shift_identity(&mut e, 3, 2, 0).unwrap().holds());
        assert!(check_q_shift_identity(&mut e, 3, 2, 2).unwrap().holds());
        assert!(check_q_shift_identity(&mut e, 4, 3, 1).unwrap().holds());
        assert!(check_odd_cycle_decomposition(&mut e, 3, 0).unwrap().holds());
        assert!(check_odd_cycle_decomposition(&mut e, 5, 1).unwrap().holds());
        assert!(check_odd_cycle_decomposition(&mut e, 7, 0).unwrap().holds());
        assert!(check_odd_cycle_decomposition(&mut e, 4, 0).is_err());
    }

    #[test]
    fn triangle_expansion() {
        let mut e = Engine::new();
        for (n, x) in [(5, 5), (7, 5), (7, 7), (9, 9)] {
            assert!(check_c3_expansion(&mut e, n, x).unwrap().holds(), "({n}, {x})");
        }
        let mut s = Sequences::new();
        assert_eq!(c3_expansion_coefficient(&mut s, 5, 0), BigInt::from(2));
        assert!(!c3_expansion_as_displayed(&mut e, 5, 5).unwrap().holds());
        assert!(!c3_expansion_as_displayed(&mut e, 7, 7).unwrap().holds());
        assert!(check_c3_expansion(&mut e, 7, 6).is_err());
    }
}
