//! Exhaustive checks over catalogues of small graphs: the lower-bound
//! conjectures, the strict inequalities proved for vertex and edge removal,
//! union comparisons, and simplicial peeling of chordal graphs.

pub mod catalogue;
pub mod checks;
pub mod peel;
pub mod report;
pub mod suites;

use thiserror::Error;

use crate::closed_forms::FormulaError;
use crate::engine::EngineError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("the internal catalogue covers orders up to {limit}, got {order}")]
    CatalogueLimit { order: usize, limit: usize },
    #[error("graph is not chordal")]
    NotChordal,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}
