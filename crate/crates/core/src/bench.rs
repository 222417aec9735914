//! Complexity benchmark: closed-form solve versus Gaussian elimination.
//!
//! Operation counts are measured by running the real code paths over
//! [`Counted<f64>`] and are deterministic. Wall-clock medians are reported
//! alongside but are advisory.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instrument::{count_ops, Counted};
use crate::oracle::gaussian_solve;
use crate::symfuncs::{compute_sigma, deflate_all, NodeSet};
use crate::vandermonde::{build_matrix, solve_square};

#[derive(Debug, Clone, Serialize)]
pub struct BenchTimes {
    /// Median seconds for the closed-form solve.
    pub closed_form: Vec<f64>,
    /// Median seconds for Gaussian elimination on the assembled matrix.
    pub gaussian: Vec<f64>,
}

/// Multiplications plus divisions per size.
#[derive(Debug, Clone, Serialize)]
pub struct BenchOpCounts {
    /// `compute_sigma` followed by `deflate_all`.
    pub sigma_deflate: Vec<u64>,
    pub closed_form: Vec<u64>,
    pub gaussian: Vec<u64>,
}

/// Least-squares slopes of `log y` against `log p`.
#[derive(Debug, Clone, Serialize)]
pub struct BenchFit {
    pub closed_form_ops: f64,
    pub gaussian_ops: f64,
    pub closed_form_time: f64,
    pub gaussian_time: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub times: BenchTimes,
    pub op_counts: BenchOpCounts,
    pub fit: BenchFit,
}

/// Chebyshev points scaled to `[-2, 2]`, where products of node differences
/// stay moderate.
pub fn bench_nodes(p: usize) -> Vec<f64> {
    (0..p)
        .map(|k| 2.0 * (PI * (2 * k + 1) as f64 / (2 * p) as f64).cos())
        .collect()
}

fn bench_values(p: usize) -> Vec<f64> {
    (0..p).map(|k| ((k * 7919) % 101) as f64 / 10.0 - 5.0).collect()
}

fn median(mut samples: Vec<Duration>) -> f64 {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid].as_secs_f64()
    } else {
        (samples[mid - 1] + samples[mid]).as_secs_f64() / 2.0
    }
}

fn time_median<R>(reps: usize, mut f: impl FnMut() -> R) -> f64 {
    let samples = (0..reps)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    median(samples)
}

/// Least-squares slope of `ln y` on `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.max(f64::MIN_POSITIVE).ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

fn validate(sizes: &[usize], reps: usize) -> Result<()> {
    if sizes.len() < 2 {
        return Err(Error::InvalidArgument("at least two sizes are required".into()));
    }
    if sizes.iter().any(|&p| p < 2) {
        return Err(Error::InvalidArgument("sizes must be at least 2".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("sizes must be strictly increasing".into()));
    }
    if reps == 0 {
        return Err(Error::InvalidArgument("repetitions must be at least 1".into()));
    }
    Ok(())
}

pub fn run_bench(sizes: &[usize], reps: usize) -> Result<BenchReport> {
    validate(sizes, reps)?;
    let mut times = BenchTimes {
        closed_form: Vec::new(),
        gaussian: Vec::new(),
    };
    let mut ops = BenchOpCounts {
        sigma_deflate: Vec::new(),
        closed_form: Vec::new(),
        gaussian: Vec::new(),
    };
    for &p in sizes {
        let nodes = NodeSet::new(bench_nodes(p))?;
        let values = bench_values(p);
        let matrix = build_matrix(&nodes, p)?;

        times.closed_form.push(time_median(reps, || solve_square(&nodes, &values)));
        times.gaussian.push(time_median(reps, || gaussian_solve(&matrix, &values)));

        let counted_nodes = NodeSet::new(nodes.as_slice().iter().copied().map(Counted).collect())?;
        let counted_values: Vec<_> = values.iter().copied().map(Counted).collect();
        let (_, c) = count_ops(|| deflate_all(compute_sigma(&counted_nodes)));
        ops.sigma_deflate.push(c.multiplicative());
        let (solved, c) = count_ops(|| solve_square(&counted_nodes, &counted_values));
        solved?;
        ops.closed_form.push(c.multiplicative());
        let counted_matrix = build_matrix(&counted_nodes, p)?;
        let (solved, c) = count_ops(|| gaussian_solve(&counted_matrix, &counted_values));
        solved?;
        ops.gaussian.push(c.multiplicative());
    }
    let xs: Vec<f64> = sizes.iter().map(|&p| p as f64).collect();
    let as_f64 = |v: &[u64]| v.iter().map(|&c| c as f64).collect::<Vec<_>>();
    let fit = BenchFit {
        closed_form_ops: loglog_slope(&xs, &as_f64(&ops.closed_form)),
        gaussian_ops: loglog_slope(&xs, &as_f64(&ops.gaussian)),
        closed_form_time: loglog_slope(&xs, &times.closed_form),
        gaussian_time: loglog_slope(&xs, &times.gaussian),
    };
    Ok(BenchReport {
        sizes: sizes.to_vec(),
        repetitions: reps,
        times,
        op_counts: ops,
        fit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_power_law() {
        let xs = [2.0, 4.0, 8.0, 16.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powi(2)).collect();
        assert!((loglog_slope(&xs, &ys) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn nodes_are_distinct() {
        for p in [2, 3, 64, 257] {
            assert!(NodeSet::new(bench_nodes(p)).is_ok());
        }
    }

    #[test]
    fn small_run_counts() {
        let report = run_bench(&[8, 16, 32], 1).unwrap();
        for (k, &p) in report.sizes.iter().enumerate() {
            let p = p as u64;
            assert_eq!(report.op_counts.sigma_deflate[k], p * (p + 1) / 2 + p * (p - 1));
            assert!(report.op_counts.closed_form[k] <= 4 * p * p);
        }
        assert_eq!(report.times.closed_form.len(), 3);
        assert!(report.fit.gaussian_ops > report.fit.closed_form_ops);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(run_bench(&[8], 1).is_err());
        assert!(run_bench(&[8, 8], 1).is_err());
        assert!(run_bench(&[16, 8], 1).is_err());
        assert!(run_bench(&[1, 8], 1).is_err());
        assert!(run_bench(&[4, 8], 0).is_err());
    }
}
