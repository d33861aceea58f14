//! The subcommands. Each writes to `out` and returns an error carrying the
//! exit status when something fails.

use std::io::Write;
use std::path::Path;

use gbell_core::closed_forms::{
    a_clique_plus_isolated, a_cycle_complement, a_cycle_plus_isolated, a_empty, a_path_complement,
    a_tree_plus_isolated, b_path_complement,
};
use gbell_core::lab::catalogue::catalogue_up_to;
use gbell_core::{graph6, oracle_s_vector, run_suite, ExactRational, Family, Graph, Sequences, Suite, ORACLE_LIMIT};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::input::{engine, engine_limit, read_graph6_file};
use crate::output::{write_csv, write_json};
use crate::sweep::{dedup, parallel_sweep};

fn rational(r: &ExactRational) -> String {
    format!("{} ({})", r.fraction_string(), r.to_decimal(6))
}

pub fn compute(g: &Graph, out: &mut dyn Write) -> Result<(), CliError> {
    let mut e = engine()?;
    let s = e.s_vector(g)?;
    let (b, t) = e.bt_of(g)?;
    if g.order() <= gbell_core::GRAPH6_LIMIT {
        writeln!(out, "graph6  {}", graph6::encode(g)?)?;
    }
    writeln!(out, "n       {}", g.order())?;
    writeln!(out, "m       {}", g.size())?;
    writeln!(out, "chi     {}", e.chromatic_number(g)?)?;
    writeln!(out, "delta   {}", g.max_degree())?;
    writeln!(out, "S       {s}")?;
    writeln!(out, "B       {b}")?;
    writeln!(out, "T       {t}")?;
    let a = s.average();
    writeln!(out, "A       {a}")?;
    writeln!(out, "A_dec   {}", a.to_decimal(6))?;
    Ok(())
}

/// Closed-form `A` for a family member with `p` isolated vertices added, the
/// engine's graph, and `B` when a formula exists.
#[allow(clippy::type_complexity)]
fn family_member(seq: &mut Sequences, family: Family, n: usize, p: usize) -> Result<(ExactRational, Option<String>, Graph), CliError> {
    let plain = |g: Graph| g.add_isolated(p).map_err(CliError::from);
    let no_isolated = || {
        if p > 0 {
            Err(CliError::Input(format!("{} has no closed form with isolated vertices", family.name())))
        } else {
            Ok(())
        }
    };
    Ok(match family {
        Family::Empty => (a_empty(seq, n + p)?, Some(seq.bell(n + p).to_string()), Graph::empty(n + p)),
        Family::Path => (a_tree_plus_isolated(seq, n, p)?, None, plain(Graph::path(n))?),
        Family::Star => (a_tree_plus_isolated(seq, n + 1, p)?, None, plain(Graph::star(n))?),
        Family::Cycle => (a_cycle_plus_isolated(seq, n, p)?, None, plain(Graph::cycle(n.max(3)))?),
        Family::Complete => (a_clique_plus_isolated(seq, n, p)?, None, plain(Graph::complete(n))?),
        Family::PathComplement => {
            no_isolated()?;
            let b = b_path_complement(seq, n)?.to_string();
            (a_path_complement(seq, n)?, Some(b), Graph::path(n).complement())
        }
        Family::CycleComplement => {
            no_isolated()?;
            (a_cycle_complement(seq, n)?, None, Graph::cycle(n.max(3)).complement())
        }
        Family::CompleteBipartite | Family::Q => {
            return Err(CliError::Input(format!("no closed form for {}", family.name())))
        }
    })
}

/// Table of closed-form values against the engine for `n` in `from..=to`.
pub fn family(name: &str, from: usize, to: usize, p: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let family: Family = name.parse()?;
    let limit = engine_limit()?;
    let mut e = engine()?;
    let mut seq = Sequences::new();
    let mut mismatches = 0;
    writeln!(out, "{:>3}  {:>12}  {:>28}  {:>28}  match", "n", "B", "formula A", "engine A")?;
    for n in from..=to {
        let (formula, b, g) = family_member(&mut seq, family, n, p)?;
        let (engine_a, matched) = if g.order() <= limit {
            let a = e.average_colors(&g)?;
            let ok = a == formula;
            mismatches += usize::from(!ok);
            (rational(&a), if ok { "yes" } else { "NO" })
        } else {
            ("-".to_string(), "-")
        };
        let b = b.unwrap_or_else(|| "-".into());
        writeln!(out, "{n:>3}  {b:>12}  {:>28}  {engine_a:>28}  {matched}", rational(&formula))?;
    }
    if mismatches > 0 {
        return Err(CliError::ChecksFailed(mismatches));
    }
    Ok(())
}

/// Runs one suite, or all of them for `all`.
pub fn verify(suite: &str, bound: Option<usize>, out: &mut dyn Write) -> Result<(), CliError> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(CliError::Input)?]
    };
    let mut e = engine()?;
    let mut failed = 0;
    for s in suites {
        let report = run_suite(&mut e, s, bound)?;
        writeln!(out, "{report}")?;
        for f in &report.failures {
            writeln!(out, "  failed: {f}")?;
        }
        for n in &report.notes {
            writeln!(out, "  note: {n}")?;
        }
        failed += report.failed;
    }
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

pub struct SweepArgs<'a> {
    pub max_n: Option<usize>,
    pub input: Option<&'a Path>,
    pub conjectures: [bool; 3],
    pub out: Option<&'a Path>,
    pub format: Format,
}

pub fn parse_conjectures(text: &str) -> Result<[bool; 3], CliError> {
    let mut selected = [false; 3];
    for part in text.split(',') {
        match part.trim() {
            "1" => selected[0] = true,
            "2" => selected[1] = true,
            "3" => selected[2] = true,
            other => return Err(CliError::Input(format!("unknown conjecture `{other}`, expected 1, 2 or 3"))),
        }
    }
    Ok(selected)
}

pub fn sweep(args: &SweepArgs<'_>, out: &mut dyn Write) -> Result<(), CliError> {
    let limit = engine_limit()?;
    let graphs = match (args.input, args.max_n) {
        (Some(path), None) => read_graph6_file(path)?.into_iter().map(|g| g.graph).collect(),
        (None, max_n) => catalogue_up_to(max_n.unwrap_or(7))?,
        (Some(_), Some(_)) => return Err(CliError::Input("give either --input or --max-n".into())),
    };
    let (graphs, duplicates) = dedup(graphs);
    let report = parallel_sweep(&graphs, limit)?;
    if let Some(path) = args.out {
        let file = std::io::BufWriter::new(std::fs::File::create(path)?);
        match args.format {
            Format::Csv => write_csv(&report, file)?,
            Format::Json => write_json(&report, duplicates, args.conjectures, file)?,
        }
    }
    let violations = report.violations_among(args.conjectures);
    writeln!(out, "graphs      {}", report.rows.len())?;
    writeln!(out, "skipped     {}", report.skipped)?;
    writeln!(out, "duplicates  {duplicates}")?;
    writeln!(out, "violations  {violations}")?;
    for s in report.summaries.iter().filter(|s| args.conjectures[s.kind.bound_index()]) {
        let keys: Vec<String> = s.minimizers.iter().map(ToString::to_string).collect();
        let status = match (s.expected_present, s.confirmed()) {
            (false, _) => "extremal graph not in input",
            (true, true) => "unique, as expected",
            (true, false) => "UNEXPECTED",
        };
        writeln!(
            out,
            "  {}={} n={}: {} graphs, min A = {} at {} [{status}]",
            s.kind.name(),
            s.value,
            s.n,
            s.graphs,
            rational(&s.min_a),
            keys.join(" ")
        )?;
    }
    for c in &report.confirmations {
        let status = if c.holds() { "holds" } else { "FAILS" };
        writeln!(out, "  {}: {} graphs, {status}", c.name, c.graphs)?;
    }
    if violations > 0 {
        return Err(CliError::ChecksFailed(violations));
    }
    Ok(())
}

/// A labeled graph of order `n` with each edge present with probability 1/2.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.next_u32() & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("order fits")
}

pub const DEFAULT_SEED: u64 = 0x5eed;
/// Largest order covered by the full catalogue in the oracle comparison.
pub const ORACLE_CATALOGUE_LIMIT: usize = 7;

/// Engine against brute-force enumeration: the full catalogue up to order 7
/// and `samples` random labeled graphs for each larger order up to `max_n`.
pub fn oracle(max_n: usize, single: Option<&Graph>, seed: u64, samples: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let mut e = engine()?;
    let mut graphs: Vec<Graph> = Vec::new();
    if let Some(g) = single {
        graphs.push(g.clone());
    } else {
        if max_n > ORACLE_LIMIT {
            return Err(CliError::Limit(format!("oracle checks go up to order {ORACLE_LIMIT}, got {max_n}")));
        }
        graphs = catalogue_up_to(max_n.min(ORACLE_CATALOGUE_LIMIT))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in ORACLE_CATALOGUE_LIMIT + 1..=max_n {
            graphs.extend((0..samples).map(|_| random_graph(&mut rng, n)));
        }
    }
    let mut mismatches = 0;
    for g in &graphs {
        let fast = e.s_vector(g)?;
        let slow = oracle_s_vector(g)?;
        if single.is_some() {
            writeln!(out, "engine  {fast}")?;
            writeln!(out, "oracle  {slow}")?;
        }
        if fast != slow {
            mismatches += 1;
            writeln!(out, "mismatch on {g}: engine {fast}, oracle {slow}")?;
        }
    }
    writeln!(out, "{} graphs compared, {mismatches} mismatches", graphs.len())?;
    if mismatches > 0 {
        return Err(CliError::ChecksFailed(mismatches));
    }
    Ok(())
}
