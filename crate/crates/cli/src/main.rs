use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use phicycle_cli::{
    parse_steps, render_text, run_cycle, run_graph, run_lemma_scan, run_phi, run_remark, AnalysisReport, CliError,
};
use phicycle_core::{SweepBounds, DEFAULT_PERMUTATION_GUARD};

/// Exact analysis of continued-fraction Möbius maps, curve configurations
/// and Camacho-Sad index cycles.
#[derive(Parser, Debug)]
#[command(name = "phicycle", version)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for exhaustive scans (0 = all cores). Results do not
    /// depend on this.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Longest sequence whose orderings are enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_PERMUTATION_GUARD, global = true)]
    guard: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build Φ for a step sequence and analyse it.
    Phi {
        /// Steps, e.g. `1,1,1` or `[-2,3]`.
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        /// Point to evaluate: `p/q`, `u:v` or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Exhaustively list tuples whose every ordering gives the identity.
    LemmaScan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        bound: u32,
    },
    /// Identity table for constant steps 0, 1, −1.
    Remark {
        #[arg(long = "r-max")]
        r_max: usize,
    },
    /// Analyse a curve configuration document.
    Graph {
        /// JSON document; `-` reads stdin.
        #[arg(long)]
        input: String,
    },
    /// Propagate indices around one cycle, or sweep many cycles.
    Cycle {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "scan")]
        steps: Option<String>,
        /// Starting index: `p/q`, `u:v` or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
        /// Sweep every cycle within the bounds below.
        #[arg(long)]
        scan: bool,
        #[arg(long = "r-min", default_value_t = 2)]
        r_min: usize,
        #[arg(long = "r-max", default_value_t = 6)]
        r_max: usize,
        #[arg(long = "e-min", default_value_t = -5, allow_hyphen_values = true)]
        e_min: i64,
        #[arg(long = "e-max", default_value_t = -1, allow_hyphen_values = true)]
        e_max: i64,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn dispatch(cmd: Command, guard: usize) -> Result<AnalysisReport, CliError> {
    match cmd {
        Command::Phi { steps, x } => run_phi(&parse_steps(&steps)?, x.as_deref(), guard),
        Command::LemmaScan { r, bound } => run_lemma_scan(r, bound, guard),
        Command::Remark { r_max } => run_remark(r_max),
        Command::Graph { input } => run_graph(&read_input(&input)?),
        Command::Cycle { steps, x0, scan, r_min, r_max, e_min, e_max } => {
            let steps = steps.as_deref().map(parse_steps).transpose()?;
            let bounds = scan.then_some(SweepBounds { r_min, r_max, e_min, e_max });
            run_cycle(steps.as_deref(), x0.as_deref(), bounds, guard)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let guard = cli.global.guard;
    match pool.install(|| dispatch(cli.command, guard)) {
        Ok(report) => {
            match cli.global.format {
                Format::Text => print!("{}", render_text(&report)),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
