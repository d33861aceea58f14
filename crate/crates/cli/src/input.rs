//! Graph sources: graph6 files, single records, edge lists, families, and
//! the engine limit from the environment.

use std::path::Path;

use gbell_core::{graph6, make_family, Engine, Family, Graph, DEFAULT_ENGINE_LIMIT};

use crate::error::CliError;

/// Environment variable overriding the engine's order limit.
pub const LIMIT_VAR: &str = "GBELL_ENGINE_LIMIT";

pub fn engine_limit() -> Result<usize, CliError> {
    match std::env::var(LIMIT_VAR) {
        Err(_) => Ok(DEFAULT_ENGINE_LIMIT),
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Input(format!("{LIMIT_VAR} must be a positive integer, got `{text}`"))),
        },
    }
}

pub fn engine() -> Result<Engine, CliError> {
    Ok(Engine::with_limit(engine_limit()?))
}

/// A graph read from a file with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberedGraph {
    pub line: usize,
    pub graph: Graph,
}

/// Parses one graph6 record per line. Blank lines are skipped and an
/// optional `>>graph6<<` header is accepted.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<NumberedGraph>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let record = raw.trim().trim_start_matches(">>graph6<<");
        if record.is_empty() {
            continue;
        }
        let graph = graph6::decode(record).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))?;
        out.push(NumberedGraph { line: i + 1, graph });
    }
    Ok(out)
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<NumberedGraph>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph6_lines(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_params(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad parameter `{p}`")))
        })
        .collect()
}

/// Exactly one of the three ways to name a graph.
pub fn graph_from_args(graph6: Option<&str>, edges: Option<&str>, family: Option<&str>, params: Option<&str>) -> Result<Graph, CliError> {
    match (graph6, edges, family) {
        (Some(g6), None, None) => Ok(graph6::decode(g6)?),
        (None, Some(e), None) => Ok(Graph::parse_edge_list(e)?),
        (None, None, Some(f)) => {
            let family: Family = f.parse()?;
            let params = parse_params(params.ok_or_else(|| CliError::Input("--family needs --params".into()))?)?;
            Ok(make_family(family, &params)?)
        }
        _ => Err(CliError::Input("give exactly one of --graph6, --edges, --family".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_numbered() {
        let got = parse_graph6_lines(">>graph6<<Bw\n\nA_\n").unwrap();
        assert_eq!(got.iter().map(|g| g.line).collect::<Vec<_>>(), [1, 3]);
        assert_eq!(got[1].graph, Graph::complete(2));
        match parse_graph6_lines("Bw\nA_\nB!\n") {
            Err(CliError::Input(msg)) => assert!(msg.starts_with("line 3:"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn graph_arguments() {
        assert_eq!(graph_from_args(Some("Bw"), None, None, None).unwrap(), Graph::complete(3));
        assert_eq!(graph_from_args(None, Some("3; 0-1"), None, None).unwrap().size(), 1);
        let g = graph_from_args(None, None, Some("path-complement"), Some("5")).unwrap();
        assert_eq!(g, Graph::path(5).complement());
        assert!(graph_from_args(Some("Bw"), Some("3; 0-1"), None, None).is_err());
        assert!(graph_from_args(None, None, Some("cycle"), Some("2")).is_err());
        assert!(graph_from_args(None, None, Some("nope"), Some("2")).is_err());
    }
}
