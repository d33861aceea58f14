use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gbell_cli::commands::{self, Format, SweepArgs, DEFAULT_SEED};
use gbell_cli::input::graph_from_args;
use gbell_cli::CliError;

/// Exact counts of non-equivalent colorings and the average number of colors.
///
/// Exit status: 0 success, 1 a check failed, 2 bad input, 3 resource limit.
/// GBELL_ENGINE_LIMIT overrides the largest order the engine accepts.
#[derive(Parser)]
#[command(name = "gbell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// graph6 record
    #[arg(long)]
    graph6: Option<String>,
    /// edge list "n; u-v,u-v,..."
    #[arg(long)]
    edges: Option<String>,
    /// family name, e.g. path, cycle, path-complement
    #[arg(long)]
    family: Option<String>,
    /// comma-separated family parameters
    #[arg(long)]
    params: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// S-vector, B, T and A of one graph
    Compute(GraphArgs),
    /// Closed-form values of a family against the engine
    Family {
        name: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
        /// isolated vertices added to each member
        #[arg(long, default_value_t = 0)]
        p: usize,
    },
    /// Run a verification suite (or `all`)
    Verify {
        suite: String,
        /// size bound; meaning depends on the suite
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Check the lower bounds on A over a catalogue or a graph6 file
    Sweep {
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 file, one record per line
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "1,2,3")]
        conjectures: String,
        /// report file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Compare the engine with brute-force enumeration
    Oracle {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// random graphs per order above 7
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(g) => {
            let graph = graph_from_args(g.graph6.as_deref(), g.edges.as_deref(), g.family.as_deref(), g.params.as_deref())?;
            commands::compute(&graph, out)
        }
        Command::Family { name, from, to, p } => commands::family(&name, from, to, p, out),
        Command::Verify { suite, max_n } => commands::verify(&suite, max_n, out),
        Command::Sweep {
            max_n,
            input,
            conjectures,
            out: path,
            format,
        } => {
            let args = SweepArgs {
                max_n,
                input: input.as_deref(),
                conjectures: commands::parse_conjectures(&conjectures)?,
                out: path.as_deref(),
                format: match format {
                    FormatArg::Csv => Format::Csv,
                    FormatArg::Json => Format::Json,
                },
            };
            commands::sweep(&args, out)
        }
        Command::Oracle {
            max_n,
            graph6,
            seed,
            samples,
        } => {
            let single = graph6.as_deref().map(gbell_core::graph6::decode).transpose()?;
            commands::oracle(max_n, single.as_ref(), seed, samples, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("gbell: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
