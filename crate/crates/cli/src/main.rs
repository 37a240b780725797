use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use primeformula::{bench, caps, verify};
use primeformula_core::formulas::{self, Strategy};
use primeformula_core::wheel;

/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "primeformula",
    version,
    about = "Floor-function formulas for pi(x), the n-th prime and d(n)",
    long_about = "Floor-function formulas for pi(x), the n-th prime and d(n), \
with naive, sqrt, recursive and wheel strategies, an independent sieve oracle \
(verify) and a scaling benchmark (bench).\n\n\
Benchmarks run single-threaded on a monotonic clock and report the minimum \
over the requested repetitions, which suppresses scheduler noise better than \
the mean."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// The formulas exactly as written (quadratic in x; capped low)
    Naive,
    /// Divisor candidates up to sqrt(n) (default)
    Sqrt,
    /// Precomputed F table with a running pi accumulator
    Recursive,
    /// Candidates coprime to a primorial modulus (requires --modulus)
    Wheel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DivStrategyArg {
    Naive,
    Sqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperationArg {
    Pi,
    NthPrime,
}

#[derive(Subcommand)]
enum Command {
    /// Count the primes not exceeding x
    Pi {
        x: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Sqrt)]
        strategy: StrategyArg,
        /// Wheel modulus (2, 6, 30, 210 or 2310); only with --strategy wheel
        #[arg(long)]
        modulus: Option<u64>,
        /// Also print strategy, elapsed time and wheel candidate density
        #[arg(long, short)]
        verbose: bool,
        /// Override the input cap for this call
        #[arg(long)]
        max_x: Option<u64>,
    },
    /// Compute the n-th prime (1-based)
    NthPrime {
        n: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Sqrt)]
        strategy: StrategyArg,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, short)]
        verbose: bool,
        /// Override the index cap for this call
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Count the divisors of n
    DivisorCount {
        n: u64,
        #[arg(long, value_enum, default_value_t = DivStrategyArg::Sqrt)]
        strategy: DivStrategyArg,
    },
    /// Check formulas against the sieve oracle and sweep the prime-bound
    /// inequalities; exits 1 if anything fails
    Verify {
        /// Upper end of the pi / divisor sweep
        #[arg(long, default_value_t = 1000)]
        max_x: u64,
        /// Upper end of the nth-prime / inequality sweep
        #[arg(long, default_value_t = 200)]
        max_n: u64,
    },
    /// Time strategies over a geometric input ladder and fit the scaling
    /// exponent (minimum over repetitions, single-threaded)
    Bench {
        #[arg(long, value_enum)]
        operation: OperationArg,
        /// Comma-separated strategy list
        #[arg(long, value_delimiter = ',', default_value = "sqrt")]
        strategies: Vec<StrategyArg>,
        /// Comma-separated input sizes; at least 4, each >= 2x the previous
        #[arg(long, value_delimiter = ',', required = true)]
        ladder: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        /// Wheel modulus for any wheel strategy in the list
        #[arg(long)]
        modulus: Option<u64>,
        /// Write the raw samples as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn resolve_strategy(arg: StrategyArg, modulus: Option<u64>) -> Result<Strategy, String> {
    match (arg, modulus) {
        (StrategyArg::Wheel, Some(m)) => {
            Strategy::wheel(m).map_err(|e| e.to_string())
        }
        (StrategyArg::Wheel, None) => {
            Err("--strategy wheel requires --modulus (2, 6, 30, 210 or 2310)".into())
        }
        (_, Some(_)) => Err("--modulus is only valid with --strategy wheel".into()),
        (StrategyArg::Naive, None) => Ok(Strategy::NaiveFloorSum),
        (StrategyArg::Sqrt, None) => Ok(Strategy::SqrtDivisor),
        (StrategyArg::Recursive, None) => Ok(Strategy::RecursivePi),
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Pi {
            x,
            strategy,
            modulus,
            verbose,
            max_x,
        } => cmd_pi(x, strategy, modulus, verbose, max_x),
        Command::NthPrime {
            n,
            strategy,
            modulus,
            verbose,
            max_n,
        } => cmd_nth_prime(n, strategy, modulus, verbose, max_n),
        Command::DivisorCount { n, strategy } => cmd_divisor_count(n, strategy),
        Command::Verify { max_x, max_n } => cmd_verify(max_x, max_n),
        Command::Bench {
            operation,
            strategies,
            ladder,
            reps,
            modulus,
            csv,
        } => cmd_bench(operation, &strategies, &ladder, reps, modulus, csv),
    }
}

fn cmd_pi(
    x: u64,
    strategy_arg: StrategyArg,
    modulus: Option<u64>,
    verbose: bool,
    max_x: Option<u64>,
) -> ExitCode {
    let strategy = match resolve_strategy(strategy_arg, modulus) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let caps = caps::resolve(max_x, None);
    let start = Instant::now();
    let result = match formulas::pi_formula_with_caps(x, strategy, &caps) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    let elapsed = start.elapsed();
    println!("{result}");
    if verbose {
        eprintln!("strategy: {}", strategy.label());
        eprintln!("elapsed: {elapsed:?}");
        if let Strategy::Wheel(m) = strategy {
            let w = wheel::build_wheel(m).expect("modulus validated");
            let count = w.candidates(x).count();
            let density = wheel::totient(m).expect("m >= 1") as f64 / m as f64;
            eprintln!("candidates: {count}");
            eprintln!("phi(m)/m: {density:.6}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_nth_prime(
    n: u64,
    strategy_arg: StrategyArg,
    modulus: Option<u64>,
    verbose: bool,
    max_n: Option<u64>,
) -> ExitCode {
    let strategy = match resolve_strategy(strategy_arg, modulus) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let caps = caps::resolve(None, max_n);
    let start = Instant::now();
    let report = match formulas::nth_prime_report_with_caps(n, strategy, &caps) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let elapsed = start.elapsed();
    println!("{}", report.value);
    if verbose {
        eprintln!("strategy: {}", strategy.label());
        eprintln!("elapsed: {elapsed:?}");
        eprintln!("summation limit: {}", report.limit);
        eprintln!("pi(limit): {}", report.pi_at_limit);
    }
    ExitCode::SUCCESS
}

fn cmd_divisor_count(n: u64, strategy: DivStrategyArg) -> ExitCode {
    let result = match strategy {
        DivStrategyArg::Naive => formulas::divisor_count_naive(n),
        DivStrategyArg::Sqrt => formulas::divisor_count_sqrt(n),
    };
    match result {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_verify(max_x: u64, max_n: u64) -> ExitCode {
    let caps = caps::resolve(None, None);
    let outcomes = match verify::run(max_x, max_n, &caps) {
        Ok(o) => o,
        Err(e) => return usage_error(e),
    };
    let mut any_failed = false;
    for o in &outcomes {
        let status = if o.failed == 0 { "pass" } else { "FAIL" };
        println!("{status} {}: passed {}, failed {}", o.name, o.passed, o.failed);
        if let Some(detail) = &o.detail {
            println!("     {detail}");
        }
        any_failed |= o.failed > 0;
    }
    if any_failed {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_bench(
    operation: OperationArg,
    strategy_args: &[StrategyArg],
    ladder: &[u64],
    reps: u32,
    modulus: Option<u64>,
    csv: Option<PathBuf>,
) -> ExitCode {
    let operation = match operation {
        OperationArg::Pi => bench::Operation::Pi,
        OperationArg::NthPrime => bench::Operation::NthPrime,
    };
    if reps < 1 {
        return usage_error("--reps must be at least 1");
    }
    if ladder.len() < 4 {
        return usage_error("--ladder needs at least 4 sizes");
    }
    if !ladder.windows(2).all(|w| w[1] >= 2 * w[0]) {
        return usage_error("--ladder must be geometric: each size >= 2x the previous");
    }

    let mut strategies = Vec::new();
    for &arg in strategy_args {
        let modulus = (arg == StrategyArg::Wheel).then_some(modulus).flatten();
        match resolve_strategy(arg, modulus) {
            Ok(s) => strategies.push(s),
            Err(e) => return usage_error(e),
        }
    }

    let caps = caps::resolve(None, None);
    let largest = *ladder.last().expect("ladder non-empty");
    for &s in &strategies {
        let cap = match operation {
            bench::Operation::Pi => caps.pi_cap(s),
            bench::Operation::NthPrime => caps.nth_cap(s),
        };
        if largest > cap {
            return usage_error(format!(
                "ladder size {largest} exceeds the {} cap {cap} for strategy {}",
                operation.label(),
                s.label()
            ));
        }
    }

    let (records, fits) = match bench::run(operation, &strategies, ladder, reps, &caps) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };

    for fit in &fits {
        println!(
            "{} {}: exponent {:.3}, r_squared {:.4}",
            fit.operation.label(),
            fit.strategy.label(),
            fit.exponent,
            fit.r_squared
        );
        if fit.r_squared < 0.9 {
            eprintln!(
                "warning: r_squared {:.4} < 0.9 for {} {}; timing too noisy for a reliable fit",
                fit.r_squared,
                fit.operation.label(),
                fit.strategy.label()
            );
        }
    }

    // Measured vs theoretical speedup for any wheel run, at the largest size.
    for &s in &strategies {
        if let Strategy::Wheel(m) = s {
            let baseline = match bench::time_one(
                operation,
                Strategy::SqrtDivisor,
                largest,
                reps,
                &caps,
            ) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let wheel_ns = records
                .iter()
                .find(|r| r.strategy == s && r.input == largest)
                .map(|r| r.elapsed_ns)
                .expect("wheel record at largest size");
            let theoretical = m as f64 / wheel::totient(m).expect("m >= 1") as f64;
            println!(
                "wheel({m}) speedup vs sqrt at {largest}: measured {:.2}x, theoretical m/phi(m) {:.2}x",
                baseline.elapsed_ns as f64 / wheel_ns as f64,
                theoretical
            );
        }
    }

    if let Some(path) = csv {
        let file = match std::fs::File::create(&path) {
            Ok(f) => f,
            Err(e) => return usage_error(format!("cannot write {}: {e}", path.display())),
        };
        if let Err(e) = bench::write_csv(file, &records) {
            return usage_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}
