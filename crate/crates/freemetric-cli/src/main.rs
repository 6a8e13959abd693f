use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use freemetric_cli::metrics::{parse_form, parse_metric, parse_weights, MetricArgs};
use freemetric_cli::report::{Report, ReportConfig};
use freemetric_cli::suites::{run_suite, SuiteCtx};
use freemetric_cli::sweep::{self, SweepArgs};
use freemetric_cli::{limits_from_env, CliError};
use freemetric_core::length::{edit_distance, fg_distance, induced_distance, wc_length};
use freemetric_core::words::{Alphabet, MonoidWord, Word};

/// Length functions, invariant metrics, and inequality checks on free
/// groups and free monoids.
#[derive(Parser)]
#[command(name = "freemetric", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a length function on a word.
    Len {
        /// word | cyc | wc | pullback | brooks:PATTERN | so3:R:EPS:SEED (EPS may be 'auto')
        #[arg(long)]
        metric: String,
        /// Word in a/A text syntax (lowercase generator, uppercase inverse).
        #[arg(long, default_value = "")]
        word: String,
        /// Per-generator weights, e.g. a=1,b=5.
        #[arg(long)]
        weights: Option<String>,
        /// Number of generators.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Linear form coefficients for the pullback metric.
        #[arg(long)]
        form: Option<String>,
        /// Defect constant added by the brooks metric.
        #[arg(long, default_value_t = 0.0)]
        defect: f64,
        /// Print the optimal matching for the wc metric.
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate an induced distance between two words.
    Dist {
        /// edit | fg | word | cyc | wc | pullback | brooks:PATTERN | so3:R:EPS:SEED
        #[arg(long)]
        metric: String,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long)]
        form: Option<String>,
        #[arg(long, default_value_t = 0.0)]
        defect: f64,
    },
    /// Run a verification suite and emit a report.
    Verify {
        /// axioms | oracles | paper-values | embedding | defects | walk | so3 | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Walk suite: total number of ±1 steps (twice a power of two).
        #[arg(long)]
        n: Option<u64>,
        /// Walk suite: Monte Carlo trials.
        #[arg(long)]
        trials: Option<u64>,
        /// Walk suite: exact enumeration instead of Monte Carlo.
        #[arg(long)]
        exact: bool,
    },
    /// Emit a CSV parameter sweep.
    Sweep {
        /// so3-ratio | wc-defect-family | homogenize
        #[arg(long)]
        kind: String,
        /// Comma-separated epsilons for so3-ratio.
        #[arg(long)]
        eps: Option<String>,
        /// Range for wc-defect-family, e.g. 1..6 or 1,2,3.
        #[arg(long)]
        k: Option<String>,
        /// Powers of two for homogenize, e.g. 2,4,8.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, CliError> {
    let cli = Cli::parse();
    let limits = limits_from_env()?;
    match cli.cmd {
        Cmd::Len {
            metric,
            word,
            weights,
            rank,
            form,
            defect,
            witness,
        } => {
            let alphabet = Alphabet::new(rank).map_err(|e| CliError(e.to_string()))?;
            let args = MetricArgs {
                alphabet: &alphabet,
                weights: parse_weights(weights.as_deref(), &alphabet)?,
                form: parse_form(form.as_deref(), rank)?,
                defect,
                limits,
            };
            let x = Word::parse(&word, &alphabet)
                .map_err(|e| CliError(format!("bad word '{word}': {e}")))?;
            if witness && metric == "wc" {
                let result = wc_length(&x, &args.weights, &limits)
                    .map_err(|e| CliError(e.to_string()))?;
                println!("{}", result.deficiency);
                let pairs: Vec<String> = result
                    .pairs
                    .iter()
                    .map(|(i, j)| format!("({i},{j})"))
                    .collect();
                println!("matching: {}", pairs.join(" "));
            } else {
                let ell = parse_metric(&metric, &args)?;
                let value = ell.eval(&x).map_err(|e| CliError(e.to_string()))?;
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dist {
            metric,
            u,
            v,
            weights,
            rank,
            form,
            defect,
        } => {
            let alphabet = Alphabet::new(rank).map_err(|e| CliError(e.to_string()))?;
            let args = MetricArgs {
                alphabet: &alphabet,
                weights: parse_weights(weights.as_deref(), &alphabet)?,
                form: parse_form(form.as_deref(), rank)?,
                defect,
                limits,
            };
            let value = match metric.as_str() {
                "edit" => {
                    let mu = MonoidWord::parse(&u, &alphabet)
                        .map_err(|e| CliError(format!("bad monoid word '{u}': {e}")))?;
                    let mv = MonoidWord::parse(&v, &alphabet)
                        .map_err(|e| CliError(format!("bad monoid word '{v}': {e}")))?;
                    edit_distance(&mu, &mv, &args.weights).map_err(|e| CliError(e.to_string()))?
                }
                "fg" => {
                    let wu = Word::parse(&u, &alphabet)
                        .map_err(|e| CliError(format!("bad word '{u}': {e}")))?;
                    let wv = Word::parse(&v, &alphabet)
                        .map_err(|e| CliError(format!("bad word '{v}': {e}")))?;
                    fg_distance(&wu, &wv, &args.weights, &limits)
                        .map_err(|e| CliError(e.to_string()))?
                }
                selector => {
                    let ell = parse_metric(selector, &args)?;
                    let wu = Word::parse(&u, &alphabet)
                        .map_err(|e| CliError(format!("bad word '{u}': {e}")))?;
                    let wv = Word::parse(&v, &alphabet)
                        .map_err(|e| CliError(format!("bad word '{v}': {e}")))?;
                    induced_distance(&ell, &wu, &wv).map_err(|e| CliError(e.to_string()))?
                }
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            seed,
            format,
            out,
            n,
            trials,
            exact,
        } => {
            let mut ctx = SuiteCtx::new(seed, limits);
            ctx.walk_steps = n;
            ctx.walk_trials = trials;
            ctx.walk_exact = exact;
            let rows = run_suite(&suite, &ctx)?;
            let report = Report::new(
                ReportConfig {
                    suite: suite.clone(),
                    seed,
                    rank: ctx.alphabet.rank(),
                    limits: limits.into(),
                    walk_steps: n,
                    walk_trials: trials,
                    walk_exact: exact.then_some(true),
                },
                rows,
            );
            let body = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
            };
            emit(&body, out.as_deref())?;
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Cmd::Sweep {
            kind,
            eps,
            k,
            n,
            seed,
            out,
        } => {
            let body = sweep::run(&SweepArgs {
                kind,
                eps,
                k,
                n,
                seed,
                limits,
            })?;
            emit(&body, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(body: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
