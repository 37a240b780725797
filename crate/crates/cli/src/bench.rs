//! Wall-clock benchmark harness with a log-log scaling-exponent fit.
//!
//! Timing takes the minimum over repetitions on a monotonic clock; the
//! minimum is far more stable than the mean against scheduler noise on a
//! busy desktop. The fitted exponent is the ordinary least-squares slope of
//! `ln(elapsed)` against `ln(input)`.

use primeformula_core::formulas::{self, Caps, Strategy};
use primeformula_core::Result;
use std::fmt;
use std::io::Write;
use std::time::Instant;

/// Which operation a benchmark exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    Pi,
    NthPrime,
}

impl Operation {
    pub fn label(&self) -> &'static str {
        match self {
            Operation::Pi => "pi",
            Operation::NthPrime => "nth_prime",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One timed sample.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub operation: Operation,
    pub strategy: Strategy,
    pub input: u64,
    pub elapsed_ns: u64,
    pub repetitions: u32,
}

/// Least-squares fit of `ln(elapsed)` vs `ln(input)` over one strategy's
/// ladder of samples.
#[derive(Debug, Clone)]
pub struct ScalingFit {
    pub operation: Operation,
    pub strategy: Strategy,
    pub points: Vec<(u64, u64)>,
    pub exponent: f64,
    pub r_squared: f64,
}

/// Time one call, minimum over `reps` repetitions. Never returns 0 ns.
pub fn time_one(
    operation: Operation,
    strategy: Strategy,
    input: u64,
    reps: u32,
    caps: &Caps,
) -> Result<BenchRecord> {
    assert!(reps >= 1);
    let mut best = u64::MAX;
    for _ in 0..reps {
        let start = Instant::now();
        match operation {
            Operation::Pi => {
                std::hint::black_box(formulas::pi_formula_with_caps(
                    std::hint::black_box(input),
                    strategy,
                    caps,
                )?);
            }
            Operation::NthPrime => {
                std::hint::black_box(formulas::nth_prime_formula_with_caps(
                    std::hint::black_box(input),
                    strategy,
                    caps,
                )?);
            }
        }
        best = best.min(start.elapsed().as_nanos() as u64);
    }
    Ok(BenchRecord {
        operation,
        strategy,
        input,
        elapsed_ns: best.max(1),
        repetitions: reps,
    })
}

/// Run the full ladder for each strategy, in order, and fit each one.
pub fn run(
    operation: Operation,
    strategies: &[Strategy],
    ladder: &[u64],
    reps: u32,
    caps: &Caps,
) -> Result<(Vec<BenchRecord>, Vec<ScalingFit>)> {
    let mut records = Vec::new();
    let mut fits = Vec::new();
    for &strategy in strategies {
        let mut points = Vec::new();
        for &input in ladder {
            let rec = time_one(operation, strategy, input, reps, caps)?;
            points.push((rec.input, rec.elapsed_ns));
            records.push(rec);
        }
        fits.push(fit_loglog(operation, strategy, points));
    }
    Ok((records, fits))
}

/// OLS slope and r^2 of `ln(elapsed)` against `ln(input)`.
pub fn fit_loglog(operation: Operation, strategy: Strategy, points: Vec<(u64, u64)>) -> ScalingFit {
    assert!(points.len() >= 2, "need at least two samples to fit");
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|&(x, t)| ((x as f64).ln(), (t as f64).ln()))
        .collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    ScalingFit {
        operation,
        strategy,
        points,
        exponent: slope,
        r_squared,
    }
}

/// Write records as CSV: `operation,strategy,input,elapsed_ns,repetitions`,
/// ordered by strategy then input (the order `run` produces).
pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> std::io::Result<()> {
    writeln!(out, "operation,strategy,input,elapsed_ns,repetitions")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.operation.label(),
            r.strategy.label(),
            r.input,
            r.elapsed_ns,
            r.repetitions
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_a_known_slope() {
        // elapsed = input^2 exactly.
        let points: Vec<(u64, u64)> = [10u64, 20, 40, 80].iter().map(|&x| (x, x * x)).collect();
        let fit = fit_loglog(Operation::Pi, Strategy::NaiveFloorSum, points);
        assert!((fit.exponent - 2.0).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-9);
    }

    #[test]
    fn csv_shape_is_deterministic() {
        let caps = Caps::default();
        let (records, _) = run(
            Operation::Pi,
            &[Strategy::SqrtDivisor],
            &[100, 200, 400, 800],
            2,
            &caps,
        )
        .unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "operation,strategy,input,elapsed_ns,repetitions");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("pi,sqrt,100,"));
        assert!(lines[4].starts_with("pi,sqrt,800,"));
        for line in &lines[1..] {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), 5);
            assert!(fields[3].parse::<u64>().unwrap() > 0);
            assert_eq!(fields[4], "2");
        }
    }
}
