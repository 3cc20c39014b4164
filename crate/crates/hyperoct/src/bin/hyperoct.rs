//! Command-line front end: parses arguments, delegates to the report
//! runners, serializes the result and maps pass/fail onto exit codes.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed (the report is
//! still emitted), 2 usage or budget errors.

use clap::{Args, Parser, Subcommand};
use hyperoct::report::{self, Budget, Report, ReportError};
use hyperoct::scalar::parse_rational;
use num::rational::BigRational;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hyperoct",
    about = "Exact computations around the signed reflection function of the hyperoctahedral group",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit the report as JSON (default is human-readable text)
    #[arg(long, global = true)]
    json: bool,
    /// Emit tabular output as CSV (moments only)
    #[arg(long, global = true)]
    csv: bool,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the randomized spot checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the size cap of the invoked subcommand
    #[arg(long, global = true)]
    budget: Option<usize>,
}

#[derive(Args)]
struct ParamArgs {
    /// q+ as an exact rational, e.g. 1/3 or -1/4
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    qp: BigRational,
    /// q- as an exact rational
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    qm: BigRational,
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s)
}

fn parse_word(s: &str) -> Result<Vec<i32>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_parts(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect()
}

#[derive(Subcommand)]
enum Cmd {
    /// Cycle type, reflection lengths and the signed reflection function
    Phi {
        /// Element as the image word s(1),...,s(n), e.g. -2,-4,-5,1,3,6
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Positive cycle lengths, e.g. 3,1
        #[arg(long)]
        rho_plus: Option<String>,
        /// Negative cycle lengths
        #[arg(long)]
        rho_minus: Option<String>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        qp: Option<BigRational>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        qm: Option<BigRational>,
    },
    /// Positive-definiteness classification of (q+, q-)
    Classify(ParamArgs),
    /// The symmetric-group analogue for a single q
    ClassifyA {
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        q: BigRational,
    },
    /// Verify the character expansion of phi on every class of B(n)
    Expand {
        #[arg(long)]
        n: usize,
    },
    /// Character table of B(n) with orthogonality checks
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Exact PSD test of the Gram matrix of phi over B(n)
    Gram {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The group-algebra factorization identity, or one element's minimal
    /// non-mixing factorization
    Factorize {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Homomorphism and character checks of the tensor representation
    SchurWeyl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long)]
        rank: usize,
    },
    /// Extreme-character evaluator against phi on all classes of B(rank)
    Hirai {
        #[arg(long)]
        rank: usize,
    },
    /// Enumerate symmetric pair partitions with cycle statistics
    Pairpart {
        #[arg(long)]
        n: usize,
        /// Only perfect (singleton-free) partitions
        #[arg(long)]
        perfect: bool,
        /// Cap on the number of partitions listed in the report
        #[arg(long, default_value_t = 20)]
        list: usize,
    },
    /// Commutation relation, adjoint identity, word formula, exclusion
    FockVerify {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },
    /// Cross-check the moment routes; --csv for the monomial table
    Moments {
        /// Largest moment order (even)
        #[arg(long, default_value_t = 8)]
        max: usize,
        /// Routes to run: only "all" is supported
        #[arg(long, default_value = "all")]
        routes: String,
        /// Also verify the classical specializations
        #[arg(long)]
        spec: bool,
    },
    /// Type-D subgroup: class splitting and restricted classification
    Typed {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        q: BigRational,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.budget);
    let outcome = run(&cli, &budget);
    match outcome {
        Ok(Output::Report(report)) => {
            let body = if cli.json {
                report.to_json_pretty()
            } else {
                report.to_text()
            };
            if emit(&cli.out, &body).is_err() {
                return ExitCode::from(2);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Raw(body)) => {
            if emit(&cli.out, &body).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

fn run(cli: &Cli, budget: &Budget) -> Result<Output, ReportError> {
    let started = std::time::Instant::now();
    let mut report = match &cli.cmd {
        Cmd::Phi {
            word,
            rho_plus,
            rho_minus,
            qp,
            qm,
        } => report::run_phi(
            word.as_deref().map(parse_word).transpose().map_err(ReportError::InvalidInput)?,
            rho_plus.as_deref().map(parse_parts).transpose().map_err(ReportError::InvalidInput)?,
            rho_minus.as_deref().map(parse_parts).transpose().map_err(ReportError::InvalidInput)?,
            qp.clone(),
            qm.clone(),
        )?,
        Cmd::Classify(p) => report::run_classify(&p.qp, &p.qm),
        Cmd::ClassifyA { q } => report::run_classify_a(q),
        Cmd::Expand { n } => report::run_expand(*n, budget)?,
        Cmd::Chartable { n } => report::run_chartable(*n, budget)?,
        Cmd::Gram { n, params } => report::run_gram(*n, &params.qp, &params.qm, budget)?,
        Cmd::Factorize { n, word } => report::run_factorize(
            *n,
            word.as_deref().map(parse_word).transpose().map_err(ReportError::InvalidInput)?,
            budget,
        )?,
        Cmd::SchurWeyl { m, n, eps, rank } => {
            report::run_schur_weyl(*m, *n, *eps, *rank, cli.seed, budget)?
        }
        Cmd::Hirai { rank } => report::run_hirai(*rank, budget)?,
        Cmd::Pairpart { n, perfect, list } => {
            report::run_pairpart(*n, *perfect, *list, budget)?
        }
        Cmd::FockVerify { d, levels } => report::run_fock_verify(*d, *levels, budget)?,
        Cmd::Moments { max, routes, spec } => {
            if routes != "all" {
                return Err(ReportError::InvalidInput(format!(
                    "unknown route set {routes:?}; only \"all\" is supported"
                )));
            }
            if cli.csv {
                let mut body = report::moments_csv(*max);
                if *spec {
                    body.push('\n');
                    body.push_str(&report::specializations_csv(*max / 2));
                }
                return Ok(Output::Raw(body));
            }
            report::run_moments(*max, *spec, budget)?
        }
        Cmd::Typed { n, q } => report::run_typed(*n, q, budget)?,
    };
    report.timing_ms = started.elapsed().as_millis();
    Ok(Output::Report(report))
}

fn emit(out: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(body.as_bytes())
        }
        None => {
            print!("{body}");
            std::io::stdout().flush()
        }
    }
}
