use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use aqt_cli::commands::{self, Selection, DEFAULT_BUDGET};
use aqt_cli::{suites, to_json, Bounds, Suite};
use aqt_core::qt::Sign;
use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "aqt",
    version,
    about = "Affine permutation statistics, Shi chambers and q,t-tables"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with_all = ["csv", "pretty"])]
    json: bool,
    /// CSV output where a table makes sense.
    #[arg(long, global = true)]
    csv: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated alcoves (point counting gets 1000 times this).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Args, Debug, Clone, Copy)]
struct SelectionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Use D^(mn-1)(n) and the matching t-offset.
    #[arg(long)]
    negative: bool,
    /// Keep only alcoves whose inverse is dominant.
    #[arg(long)]
    positive_only: bool,
}

impl From<SelectionArgs> for Selection {
    fn from(a: SelectionArgs) -> Self {
        Selection {
            n: a.n,
            m: a.m,
            sign: if a.negative {
                Sign::Negative
            } else {
                Sign::Positive
            },
            positive_only: a.positive_only,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of one affine permutation.
    Stat {
        #[arg(long)]
        n: Option<usize>,
        /// Window such as "1,5,0".
        #[arg(long)]
        window: String,
    },
    /// Joint (shi^m, ish of the inverse) table over a simplex.
    Table(SelectionArgs),
    /// Bivariate generating function over a simplex.
    Genfun(SelectionArgs),
    /// Alcoves of D^p(n), or the chambers of Shi^m(n) with --chambers.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "chambers")]
        p: Option<u64>,
        #[arg(long)]
        chambers: bool,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Keep only alcoves whose inverse is dominant.
        #[arg(long)]
        dominant_inverse: bool,
    },
    /// Characteristic polynomial by finite-field point counts.
    Charpoly(ArrangementArgs),
    /// Characteristic polynomial plus chamber and bounded-chamber counts.
    Counts(ArrangementArgs),
    /// Representing alcove to labeled Dyck path, or back with --path.
    Bijection {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, conflicts_with = "path")]
        window: Option<String>,
        /// JSON such as {"w":[3,1,2],"ideal":[[1,3],[2,3]]}.
        #[arg(long)]
        path: Option<String>,
    },
    /// Run a verification suite; exit status 1 on any mismatch.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Random windows for the inverse-statistics suite.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
struct ArrangementArgs {
    /// cox, shi, shi_m, ish or aff-truncated.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<u32>,
}

enum Outcome {
    Ok,
    Mismatch,
}

fn write_out(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(value: &impl serde::Serialize, g: &Global) -> Result<()> {
    write_out(&format!("{}\n", to_json(value, g.pretty)?))
}

fn run(cli: Cli) -> Result<Outcome> {
    let g = &cli.global;
    match cli.command {
        Command::Stat { n, window } => emit(&commands::cmd_stat(&window, n)?, g)?,
        Command::Table(args) => {
            let out = commands::cmd_table(args.into(), g.budget)?;
            if g.csv {
                write_out(&out.csv())?;
            } else {
                emit(&out, g)?;
            }
        }
        Command::Genfun(args) => emit(&commands::cmd_genfun(args.into(), g.budget)?, g)?,
        Command::Enumerate {
            n,
            p,
            chambers,
            m,
            dominant_inverse,
        } => {
            if chambers {
                let out = commands::cmd_enumerate_chambers(n, m, g.budget)?;
                if g.csv {
                    write_out(&out.csv())?;
                } else {
                    emit(&out, g)?;
                }
            } else {
                let p = p.expect("clap enforces --p");
                emit(
                    &commands::cmd_enumerate_simplex(n, p, dominant_inverse, g.budget)?,
                    g,
                )?;
            }
        }
        Command::Charpoly(a) => emit(
            &commands::cmd_charpoly(&a.family, a.n, a.m, false, g.budget)?,
            g,
        )?,
        Command::Counts(a) => emit(
            &commands::cmd_charpoly(&a.family, a.n, a.m, true, g.budget)?,
            g,
        )?,
        Command::Bijection { n, window, path } => emit(
            &commands::cmd_bijection(window.as_deref(), path.as_deref(), n)?,
            g,
        )?,
        Command::Verify {
            suite,
            n_max,
            samples,
        } => {
            let suite: Suite = suite.parse()?;
            let bounds = Bounds {
                n_max,
                seed: g.seed,
                budget: g.budget,
                samples,
            };
            let report = suites::run(suite, &bounds)?;
            emit(&report, g)?;
            if report.has_mismatch() {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn configure_threads() {
    if let Some(n) = std::env::var("AQT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second call fails harmlessly, which only matters in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
