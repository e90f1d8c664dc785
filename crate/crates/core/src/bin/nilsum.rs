use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nilsum::driver::{
    cmd_check, cmd_remarks, cmd_search, cmd_serialize, cmd_suite, load_algebra, AlgebraSpec,
    Predicate, RemarksParams, Report, SearchBudget, SearchMode, Suite, SuiteParams,
};
use nilsum::{Error, Result};

#[derive(Parser)]
#[command(
    name = "nilsum",
    version,
    about = "Exact experiments with Lie algebras over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Prime used where a spec or suite leaves it unset.
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    /// Random samples for randomized modes.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget_subspaces: u128,
    #[arg(long, global = true, default_value_t = 600.0)]
    budget_seconds: f64,
    /// Write the report (or, for `serialize`, the algebra file) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Randomized,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and evaluate predicates on it.
    Check {
        #[arg(long)]
        spec: String,
        /// Comma-separated; defaults to all of them.
        #[arg(long, value_delimiter = ',')]
        predicates: Vec<String>,
    },
    /// Look for two nilpotent subalgebras summing to the algebra.
    Search {
        #[arg(long)]
        spec: String,
    },
    /// Run one of lemma2_3, lemma4, deform, theorem_smoke.
    Suite {
        name: String,
        #[arg(long)]
        m: Option<usize>,
    },
    /// The three decomposition examples: triangular, Heisenberg-Weyl, two-dim.
    Remarks,
    /// Write an algebra file, or validate one with --load.
    Serialize {
        #[arg(long, required_unless_present = "load")]
        spec: Option<String>,
        #[arg(long, conflicts_with = "spec")]
        load: Option<PathBuf>,
    },
}

fn parse_spec(src: &str, p: Option<u32>) -> Result<AlgebraSpec> {
    let spec = AlgebraSpec::parse(src)?;
    Ok(match p {
        Some(p) => spec.with_default_p(p),
        None => spec,
    })
}

fn run(cli: Cli) -> Result<Option<Report>> {
    let c = &cli.common;
    let budget = SearchBudget {
        subspaces: c.budget_subspaces,
        seconds: Some(c.budget_seconds),
    };
    let report = match &cli.command {
        Command::Check { spec, predicates } => {
            let preds = if predicates.is_empty() {
                Predicate::ALL.to_vec()
            } else {
                predicates
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<_>>()?
            };
            cmd_check(&parse_spec(spec, c.p)?, &preds)?
        }
        Command::Search { spec } => {
            let mode = match c.mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Randomized => SearchMode::Randomized {
                    samples: c.samples.unwrap_or(200),
                    seed: c.seed,
                },
            };
            cmd_search(&parse_spec(spec, c.p)?, mode, budget)?
        }
        Command::Suite { name, m } => {
            let suite: Suite = name.parse()?;
            cmd_suite(
                suite,
                SuiteParams {
                    p: c.p,
                    m: *m,
                    seed: c.seed,
                    samples: c.samples,
                    exhaustive: matches!(c.mode, Mode::Exhaustive),
                    budget_subspaces: c.budget_subspaces,
                },
            )?
        }
        Command::Remarks => {
            let mut params =
                c.p.map_or_else(RemarksParams::default, RemarksParams::at_prime);
            params.seed = c.seed;
            if let Some(s) = c.samples {
                params.samples = s;
            }
            cmd_remarks(params, budget)?
        }
        Command::Serialize {
            spec: Some(spec), ..
        } => {
            let out = c
                .out
                .as_ref()
                .ok_or_else(|| Error::Invalid("serialize needs --out FILE".into()))?;
            let report = cmd_serialize(&parse_spec(spec, c.p)?, out)?;
            println!("{}", report.to_json()?.trim_end());
            return Ok(None);
        }
        Command::Serialize {
            load: Some(path), ..
        } => {
            let (l, graded) = load_algebra(path)?;
            println!(
                "{} is valid: dim {} over GF({}){}",
                path.display(),
                l.dim(),
                l.field().p(),
                if graded.is_some() { ", graded" } else { "" }
            );
            return Ok(None);
        }
        Command::Serialize { .. } => unreachable!("clap enforces --spec or --load"),
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.common.out.clone();
    match run(cli).and_then(|r| {
        let Some(r) = r else { return Ok(()) };
        let json = r.to_json()?;
        match out {
            Some(path) => std::fs::write(path, json).map_err(Error::from),
            None => {
                print!("{json}");
                Ok(())
            }
        }
    }) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nilsum: {e}");
            ExitCode::from(2)
        }
    }
}
