//! Parallel conjecture sweep. Each worker owns an engine and its cache; the
//! report is assembled in key order, so it does not depend on scheduling.

use std::collections::BTreeSet;

use gbell_core::lab::report::{collect, sweep_one, SweepReport};
use gbell_core::{Engine, Graph, GraphKey, Sequences};
use rayon::prelude::*;

use crate::error::CliError;

/// Drops graphs isomorphic to an earlier one; returns the survivors and the
/// number dropped.
pub fn dedup(graphs: Vec<Graph>) -> (Vec<Graph>, usize) {
    let mut seen = BTreeSet::new();
    let before = graphs.len();
    let kept: Vec<Graph> = graphs.into_iter().filter(|g| seen.insert(GraphKey::of(g))).collect();
    let dropped = before - kept.len();
    (kept, dropped)
}

/// Sweeps `graphs` on the rayon pool. Graphs of order 0 or above `limit`
/// are counted as skipped.
pub fn parallel_sweep(graphs: &[Graph], limit: usize) -> Result<SweepReport, CliError> {
    let (fit, skipped): (Vec<&Graph>, Vec<&Graph>) = graphs.iter().partition(|g| g.order() >= 1 && g.order() <= limit);
    let results = fit
        .par_iter()
        .map_init(|| (Engine::with_limit(limit), Sequences::new()), |(engine, seq), g| sweep_one(engine, seq, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(collect(results, skipped.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbell_core::lab::catalogue::catalogue_up_to;
    use gbell_core::lab::report::sweep;

    #[test]
    fn matches_serial_sweep() {
        let graphs = catalogue_up_to(5).unwrap();
        let serial = sweep(&mut Engine::new(), &graphs).unwrap();
        assert_eq!(parallel_sweep(&graphs, 20).unwrap(), serial);
    }

    #[test]
    fn duplicates_and_oversized() {
        let (kept, dropped) = dedup(vec![Graph::path(3), "3; 0-2,2-1".parse().unwrap(), Graph::complete(3)]);
        assert_eq!((kept.len(), dropped), (2, 1));
        let report = parallel_sweep(&[Graph::complete(3), Graph::empty(9)], 8).unwrap();
        assert_eq!((report.rows.len(), report.skipped), (1, 1));
    }
}
