use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Parser, Subcommand};
use pdtest::bench::{run_bench, BenchConfig, Family};
use pdtest::check::{exit_code, run_check, CheckRequest, EXIT_ERROR};
use pdtest::format::format_matrix;
use pdtest::outcome::{describe, OutcomeRecord};
use pdtest_core::generators::{gen_nakayama, gen_random_positive, gen_random_uti};
use pdtest_core::{Algorithm, InputMatrix, Strategy};

#[derive(Parser)]
#[command(
    name = "pdtest",
    version,
    about = "Positive definiteness tests for unidiagonal triangle-integral matrices",
    after_help = "Exit codes of `check`: 0 = positive definite, 1 = not positive definite, \
                  2 = input or usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test the matrix in FILE.
    Check {
        file: PathBuf,
        /// inflations, root-inflations or gauss.
        #[arg(long, default_value = "inflations", value_parser = parse_algorithm)]
        algo: Algorithm,
        /// 0 = first, 1 = last, 2 = first or last at random, 3 = uniformly random dotted edge.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        strategy: Option<u8>,
        /// Seed of the randomized strategies; picked from the clock if omitted.
        #[arg(long)]
        seed: Option<u64>,
        /// Do not reject coefficients outside {-1, 0, 1} early.
        #[arg(long)]
        no_precheck: bool,
        /// Run the root phase of root-inflations to completion.
        #[arg(long)]
        no_early_exit: bool,
        /// Print the outcome as one JSON object.
        #[arg(long)]
        json: bool,
        /// Print every inflation performed.
        #[arg(long)]
        trace: bool,
    },
    /// Generate a test matrix.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the tests over a family of matrices.
    Bench {
        /// Comma-separated matrix sizes.
        #[arg(long, value_delimiter = ',', default_values_t = [100, 200, 400])]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = ["inflations".to_owned(), "root-inflations".to_owned(), "gauss".to_owned()])]
        algos: Vec<String>,
        #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2, 3])]
        strategies: Vec<u8>,
        #[arg(long, value_delimiter = ',', default_values_t = [0])]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// nakayama, random-positive or random.
        #[arg(long, default_value = "nakayama", value_parser = parse_family)]
        family: Family,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The Nakayama matrix Nak(N).
    Nakayama {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A random positive definite matrix obtained by inflating a Dynkin graph.
    RandomPositive {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A random upper-triangular unidiagonal integer matrix.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        range: i64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    Algorithm::from_name(s).ok_or_else(|| format!("expected inflations, root-inflations or gauss, got {s:?}"))
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| format!("expected nakayama, random-positive or random, got {s:?}"))
}

fn clock_seed() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_nanos() as u64)
}

fn write_matrix(path: &Path, a: &InputMatrix, comment: &str) -> anyhow::Result<()> {
    std::fs::write(path, format_matrix(a, &[comment]))
        .with_context(|| format!("cannot write {}", path.display()))
}

fn generate(kind: GenKind) -> anyhow::Result<()> {
    match kind {
        GenKind::Nakayama { n, output } => {
            anyhow::ensure!(n >= 1, "N must be at least 1");
            write_matrix(&output, &gen_nakayama(n), &format!("Nak({n})"))
        }
        GenKind::RandomPositive { n, seed, steps, output } => {
            anyhow::ensure!(n >= 1, "N must be at least 1");
            let comment = format!("random positive, n={n} seed={seed} steps={steps}");
            write_matrix(&output, &gen_random_positive(n, seed, steps), &comment)
        }
        GenKind::Random { n, seed, range, density, output } => {
            anyhow::ensure!(n >= 1, "N must be at least 1");
            anyhow::ensure!(range >= 1, "--range must be at least 1");
            anyhow::ensure!(density > 0.0 && density <= 1.0, "--density must lie in (0, 1]");
            let comment = format!("random uti, n={n} seed={seed} range={range} density={density}");
            write_matrix(&output, &gen_random_uti(n, seed, range, density), &comment)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, algo, strategy, seed, no_precheck, no_early_exit, json, trace } => {
            let mut req = CheckRequest::new(file, algo);
            req.strategy = strategy.map(|s| Strategy::from_tag(s).expect("range checked by clap"));
            req.seed = seed;
            req.precheck = !no_precheck;
            req.early_exit = !no_early_exit;
            for w in req.warnings() {
                eprintln!("warning: {w}");
            }
            if algo != Algorithm::Gauss
                && req.seed.is_none()
                && req.strategy.is_some_and(Strategy::is_randomized)
            {
                req.seed = Some(clock_seed());
            }
            let result = run_check(&req);
            match &result {
                Ok(out) => {
                    if json {
                        println!("{}", OutcomeRecord::from(out).to_json());
                    } else {
                        println!("{}", describe(out));
                    }
                    if trace {
                        if json {
                            eprint!("{}", out.log);
                        } else {
                            print!("{}", out.log);
                        }
                    }
                }
                Err(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&result) as u8)
        }
        Command::Gen { kind } => match generate(kind) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_ERROR as u8)
            }
        },
        Command::Bench { sizes, algos, strategies, seeds, reps, family, output } => {
            let config = BenchConfig { family, sizes, algos, strategies, seeds, reps };
            let result = run_bench(&config).and_then(|report| {
                report.write_dir(&output)?;
                Ok(report)
            });
            match result {
                Ok(report) => {
                    for w in &report.warnings {
                        eprintln!("{w}");
                    }
                    print!("{}", report.summary_csv().unwrap_or_default());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(EXIT_ERROR as u8)
                }
            }
        }
    }
}
