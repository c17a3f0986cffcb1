//! The log sum inequality: Σ aᵢ log(aᵢ/bᵢ) ≥ (Σaᵢ) log(Σaᵢ/Σbᵢ) for
//! nonnegative vectors, with the conventions 0·log 0 = 0,
//! a·log(a/0) = +∞ for a > 0, and 0·log(0/0) = 0.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::campaign::ConfigError;
use crate::gen::trial_rng;

/// LHS − RHS of the inequality in the given log base; nonnegative when the
/// inequality holds. An infinite left side dominates, so the residual is
/// +∞ whenever some aᵢ > 0 meets bᵢ = 0 (the right side is then infinite
/// too, and the inequality holds as ∞ ≥ ∞).
pub fn check_log_sum(a: &[f64], b: &[f64], base: f64) -> f64 {
    assert_eq!(a.len(), b.len(), "vectors must have equal length");
    assert!(base > 1.0, "log base must exceed 1");
    assert!(
        a.iter().chain(b).all(|x| x.is_finite() && *x >= 0.0),
        "entries must be finite and nonnegative"
    );
    let ln_base = base.ln();

    let mut lhs = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        if x == 0.0 {
            continue; // covers 0·log 0 and 0·log(0/0)
        }
        if y == 0.0 {
            return f64::INFINITY;
        }
        lhs += x * (x / y).ln() / ln_base;
    }

    let sum_a: f64 = a.iter().sum();
    let sum_b: f64 = b.iter().sum();
    let rhs = if sum_a == 0.0 {
        0.0
    } else {
        // sum_b > 0 here: sum_b = 0 with sum_a > 0 forces some aᵢ > 0
        // against bᵢ = 0, already returned above.
        sum_a * (sum_a / sum_b).ln() / ln_base
    };
    lhs - rhs
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogSumConfig {
    pub trials: usize,
    pub seed: u64,
    pub log_base: f64,
    /// Vector lengths are drawn uniformly from 1..=max_len.
    pub max_len: usize,
    /// Entries are drawn uniformly from [0, max_entry).
    pub max_entry: f64,
}

impl LogSumConfig {
    pub fn standard(trials: usize, seed: u64) -> Self {
        Self {
            trials,
            seed,
            log_base: 2.0,
            max_len: 10,
            max_entry: 10.0,
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        if !self.log_base.is_finite() || self.log_base <= 1.0 {
            return Err(ConfigError::BadLogBase);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogSumReport {
    pub config: LogSumConfig,
    /// Smallest residual over all random pairs; the inequality demands it
    /// stay above −1e-12.
    pub min_residual: f64,
    pub min_trial: u64,
    /// Largest |residual| over the paired equality cases a = b, where the
    /// inequality is tight.
    pub equality_max_abs: f64,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl LogSumReport {
    pub fn passed(&self) -> bool {
        self.min_residual >= -1e-12 && self.equality_max_abs <= 1e-12
    }
}

/// Fuzzes random nonnegative vector pairs plus the equality case of every
/// drawn vector.
pub fn run_logsum_fuzz(config: &LogSumConfig) -> Result<LogSumReport, ConfigError> {
    config.validate()?;
    let start = Instant::now();

    let residuals: Vec<(f64, f64)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, trial as u64);
            let len = rng.random_range(1..=config.max_len);
            let a: Vec<f64> = (0..len).map(|_| rng.random::<f64>() * config.max_entry).collect();
            let b: Vec<f64> = (0..len).map(|_| rng.random::<f64>() * config.max_entry).collect();
            (
                check_log_sum(&a, &b, config.log_base),
                check_log_sum(&a, &a, config.log_base).abs(),
            )
        })
        .collect();

    let mut min_residual = f64::INFINITY;
    let mut min_trial = 0;
    let mut equality_max_abs: f64 = 0.0;
    for (trial, (residual, equality)) in residuals.iter().enumerate() {
        if *residual < min_residual {
            min_residual = *residual;
            min_trial = trial as u64;
        }
        equality_max_abs = equality_max_abs.max(*equality);
    }

    Ok(LogSumReport {
        config: config.clone(),
        min_residual,
        min_trial,
        equality_max_abs,
        runtime_ms: start.elapsed().as_millis(),
    })
}
