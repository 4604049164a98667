//! `permstat`: evaluate statistics, emit distributions and tables, run the
//! invariant suites and the cosine construction.
//!
//! Exit codes: 0 success, 1 malformed arguments, 2 domain refusal,
//! 3 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permstat::cosine;
use permstat::distributions::{DistributionRequest, Method};
use permstat::enumeration::{Sweep, HARD_MAX_RANK, MAX_RANK_ENV};
use permstat::statistics::{StatParams, Statistic};
use permstat::tables::{self, Table};
use permstat::verify::{self, Suite};
use permstat::{Error, Permutation};

#[derive(Parser)]
#[command(name = "permstat", version, about = "Refined inversion statistics on permutations")]
struct Cli {
    /// Parallel blocks for exhaustive sweeps (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a statistic on one permutation
    Stat {
        /// One-line notation, e.g. "3 1 4 5 6 2" or 314562
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        stat: StatArgs,
    },
    /// Distribution polynomial of a statistic over S_n
    Dist {
        #[command(flatten)]
        stat: StatArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = DistFormat::Pretty)]
        format: DistFormat,
        /// Also compute by brute force and fail (exit 3) on any difference
        #[arg(long)]
        cross_check: bool,
    },
    /// Permutations with a given dot product against the identity
    Cosine {
        #[command(subcommand)]
        action: CosineAction,
    },
    /// Run invariant suites exhaustively
    Verify {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Permit --max-n above 9
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Regenerate a distribution table
    Tables {
        #[arg(long, value_parser = parse_table)]
        table: Table,
        /// Defaults to the largest rank of the printed table
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Subcommand)]
enum CosineAction {
    /// Build π with 1·π = k
    Construct {
        #[arg(long)]
        k: u64,
    },
    /// Count permutations of any rank with 1·π = k
    Count {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Is there π with 1·π = k and an even number of odd values at odd positions?
    Parity {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        max_rank: Option<usize>,
    },
}

#[derive(Args)]
struct StatArgs {
    /// invsum, ninvsum, cosine, inv_k, ninv_k, inv_k1k2, inv_le_k, modinv_dk, ipcni_k, lbsum_variant
    #[arg(long)]
    stat: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    k2: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// base, ge_k, le_k or eq_k
    #[arg(long)]
    variant: Option<String>,
}

impl StatArgs {
    fn statistic(&self) -> Result<Statistic, Error> {
        let params = StatParams {
            k: self.k,
            k2: self.k2,
            d: self.d,
            variant: self.variant.clone(),
        };
        Statistic::from_parts(&self.stat, &params)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Closed,
    Recurrence,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Closed => Method::Closed,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DistFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_table(s: &str) -> Result<Table, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What went wrong, already mapped to an exit code.
enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Mismatch(_) => Failure::Verification(msg),
            Error::EmptyInput
            | Error::NotAPermutation(_)
            | Error::DuplicateEntries
            | Error::ZeroRank
            | Error::MissingParameterK
            | Error::InvalidStatistic(_)
            | Error::BadParams(_)
            | Error::UnknownPattern(_)
            | Error::PolySyntax { .. }
            | Error::PolyJson(_)
            | Error::DegreeTooLarge(_) => Failure::Usage(msg),
            _ => Failure::Domain(msg),
        }
    }
}

fn sweep(jobs: usize, max_rank: Option<usize>) -> Result<Sweep, Failure> {
    let base = match max_rank {
        Some(r) => Sweep::with_max_rank(r),
        None => Sweep::from_env()?,
    };
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };
    Ok(base.jobs(jobs))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Stat { perm, stat } => {
            let pi: Permutation = perm.parse()?;
            println!("{}", stat.statistic()?.evaluate(&pi));
        }
        Command::Dist {
            stat,
            n,
            method,
            format,
            cross_check,
        } => {
            let statistic = stat.statistic()?;
            let out = DistributionRequest::new(statistic, n)
                .method(method.into())
                .cross_check(cross_check)
                .compute(&sweep(cli.jobs, None)?)?;
            match format {
                DistFormat::Json => println!("{}", out.poly.to_json()),
                DistFormat::Pretty => println!("{}", out.poly),
                DistFormat::Csv => {
                    let params = statistic.params();
                    let names: Vec<&str> = params.iter().map(|(k, _)| *k).collect();
                    let values: Vec<&str> = params.iter().map(|(_, v)| v.as_str()).collect();
                    let mut header = vec!["n"];
                    header.extend(&names);
                    header.push("coeffs_ascending");
                    println!("{}", header.join(","));
                    let mut row = vec![n.to_string()];
                    row.extend(values.iter().map(|v| v.to_string()));
                    row.push(format!("\"{}\"", out.poly.to_decimal_strings().join(" ")));
                    println!("{}", row.join(","));
                }
            }
        }
        Command::Cosine { action } => match action {
            CosineAction::Construct { k } => match cosine::construct(k) {
                Ok(pi) => println!("{pi}"),
                Err(Error::NotAchievable(k)) => {
                    return Err(Failure::Domain(format!("{k} is not achievable")));
                }
                Err(e) => return Err(e.into()),
            },
            CosineAction::Count { k, max_rank } => {
                println!("{}", cosine::count_with_cosine(k, &sweep(cli.jobs, max_rank)?)?);
            }
            CosineAction::Parity { k, max_rank } => {
                println!("{}", cosine::has_even_odd_parity(k, &sweep(cli.jobs, max_rank)?)?);
            }
        },
        Command::Verify {
            suite,
            max_n,
            allow_large,
            format,
        } => {
            if max_n > 9 && !allow_large {
                return Err(Failure::Usage(format!(
                    "--max-n {max_n} needs --allow-large (and {MAX_RANK_ENV} >= {max_n}, at most {HARD_MAX_RANK})"
                )));
            }
            let suites = Suite::select(&suite)?;
            let reports = verify::run_all(&suites, max_n, &sweep(cli.jobs, None)?)?;
            match format {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
                }
                ReportFormat::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} suite(s) failed")));
            }
        }
        Command::Tables {
            table,
            n_max,
            format,
        } => {
            let n_max = n_max.unwrap_or(table.default_n_max());
            let rows = tables::rows(table, n_max, &sweep(cli.jobs, None)?)?;
            match format {
                TableFormat::Csv => print!("{}", tables::to_csv(table, &rows)),
                TableFormat::Json => println!("{}", tables::to_json(table, &rows)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
