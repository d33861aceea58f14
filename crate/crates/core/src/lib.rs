//! Counting colorings of graphs up to permutation of the colors.
//!
//! For a graph `G` on `n` vertices, `S(G, k)` counts partitions of the vertex
//! set into exactly `k` stable sets. The crate computes the vector
//! `S(G, 1..=n)`, the totals `B(G) = sum S(G, k)` and `T(G) = sum k S(G, k)`,
//! and the average number of colors `A(G) = T(G) / B(G)` as an exact rational.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod closed_forms;
pub mod engine;
pub mod graph;
pub mod graph6;
pub mod identities;
pub mod lab;
pub mod numbers;
pub mod oracle;
pub mod rational;

pub use canon::{canonical_form, canonical_key, CanonicalKey, GraphKey, CANON_LIMIT};
pub use closed_forms::{BoundTriple, FormulaError};
pub use engine::{ColorCountVector, Engine, EngineError, DEFAULT_ENGINE_LIMIT};
pub use graph::{make_family, Family, Graph, GraphError, MAX_ORDER};
pub use graph6::{Graph6Error, GRAPH6_LIMIT};
pub use identities::{Mismatch, Verdict};
pub use lab::report::{SweepReport, ClassSummary, Confirmation};
pub use lab::suites::{run_suite, Suite, SuiteReport};
pub use lab::LabError;
pub use numbers::{NumberError, Sequences};
pub use oracle::{oracle_s_vector, refined_counts, RefinedCounts, ORACLE_LIMIT};
pub use rational::ExactRational;
