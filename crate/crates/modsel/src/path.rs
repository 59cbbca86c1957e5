//! Exact breakpoint representation of the penalized model selection function.
//!
//! For a validated loss sequence, the selection function maps a penalty
//! `lambda >= 0` to the smallest model `k` minimizing `L_k + lambda * r_k`.
//! It is piecewise constant with at most `N - 1` finite breakpoints, and
//! [`exact_path`] computes the full representation in one left-to-right pass
//! whose total while-loop work is bounded by `2N - 3`.

use crate::error::{Error, Result};
use crate::loss::LossSequence;

/// Piecewise-constant representation of the model selection function.
///
/// `models` holds 1-based indices into the input sequence, strictly
/// increasing from 1 to `N`. `breakpoints` has one more entry: it starts at
/// `+inf`, ends at `0`, and is strictly decreasing. Model `models[i]`
/// (0-based `i`) is selected for penalties strictly inside
/// `(breakpoints[i + 1], breakpoints[i])`.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectionPath {
    models: Vec<usize>,
    breakpoints: Vec<f64>,
}

impl SelectionPath {
    pub(crate) fn from_raw(models: Vec<usize>, breakpoints: Vec<f64>) -> Self {
        debug_assert_eq!(breakpoints.len(), models.len() + 1);
        debug_assert_eq!(breakpoints.first(), Some(&f64::INFINITY));
        debug_assert_eq!(breakpoints.last(), Some(&0.0));
        debug_assert!(models.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(breakpoints.windows(2).all(|w| w[0] > w[1]));
        Self { models, breakpoints }
    }

    /// Selected model indices (1-based into the input), strictly increasing.
    pub fn models(&self) -> &[usize] {
        &self.models
    }

    /// Interval boundaries from `+inf` down to `0`, one more than `models`.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Number of selectable models `M`.
    pub fn model_count(&self) -> usize {
        self.models.len()
    }

    /// Model selected at `penalty`, by binary search over the breakpoints.
    ///
    /// A penalty equal to a finite breakpoint resolves to the model of the
    /// higher-penalty side, i.e. the smaller model, matching the
    /// smallest-argmin convention of [`evaluate_selection`].
    pub fn query(&self, penalty: f64) -> Result<usize> {
        if !penalty.is_finite() || penalty < 0.0 {
            return Err(Error::NegativePenalty);
        }
        // Last interval whose upper boundary lies strictly above the penalty.
        let above = self.breakpoints[..self.models.len()].partition_point(|&b| b > penalty);
        Ok(self.models[above - 1])
    }

    /// Drops interior models whose selection interval is narrower than
    /// `epsilon`; the model above each dropped sliver absorbs it. The first
    /// and last models are always kept. Presentation helper only: the exact
    /// algorithms never filter.
    pub fn filter_narrow(&self, epsilon: f64) -> SelectionPath {
        let m = self.models.len();
        let mut models = vec![self.models[0]];
        let mut breakpoints = vec![f64::INFINITY];
        for i in 1..m {
            let width = self.breakpoints[i] - self.breakpoints[i + 1];
            if i == m - 1 || width >= epsilon {
                models.push(self.models[i]);
                breakpoints.push(self.breakpoints[i]);
            }
        }
        breakpoints.push(0.0);
        SelectionPath { models, breakpoints }
    }
}

/// Per-step while-loop counts of the path computation.
///
/// `per_step` holds `w_t` for `t = 2..=N` (empty for `N = 1`); `total` is
/// their sum `W_N`, which satisfies `N - 1 <= W_N <= 2N - 3` for `N >= 2`
/// and equals `2N - 1 - M` where `M` is the number of selected models.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IterationStats {
    per_step: Vec<u64>,
    total: u64,
}

impl IterationStats {
    /// `w_t` for `t = 2..=N`.
    pub fn per_step(&self) -> &[u64] {
        &self.per_step
    }

    /// `W_N`, the summed while-loop work.
    pub fn total(&self) -> u64 {
        self.total
    }
}

#[inline]
fn crossover_raw(loss_a: f64, complexity_a: f64, loss_b: f64, complexity_b: f64) -> f64 {
    (loss_a - loss_b) / (complexity_b - complexity_a)
}

/// Penalty at which the cost lines of two models intersect:
/// `loss_a + c * complexity_a = loss_b + c * complexity_b`.
///
/// Callers must pass the lower-complexity model first with the higher loss
/// (`loss_a > loss_b`); the crossing is then strictly positive.
pub fn crossover_penalty(
    loss_a: f64,
    complexity_a: f64,
    loss_b: f64,
    complexity_b: f64,
) -> Result<f64> {
    if complexity_b <= complexity_a {
        return Err(Error::DegenerateCrossing);
    }
    Ok(crossover_raw(loss_a, complexity_a, loss_b, complexity_b))
}

/// Computes the exact selection path in a single pass over the models.
///
/// Models are inserted in order of increasing size. Each new model's cost
/// line undercuts the current envelope from below; stored breakpoints at or
/// below the candidate crossing are discarded (comparison is `>=`, so an
/// exact tie removes the stored breakpoint) and the crossing with the
/// deepest surviving model becomes the new breakpoint. Working storage is
/// three flat arrays of length `N`.
pub fn exact_path(input: &LossSequence) -> (SelectionPath, IterationStats) {
    let n = input.len();
    let mut models = vec![0usize; n];
    // upper[j] is the upper interval boundary of models[j]; upper[0] = +inf.
    let mut upper = vec![0f64; n];
    let mut per_step = Vec::with_capacity(n.saturating_sub(1));

    models[0] = 1;
    upper[0] = f64::INFINITY;
    let mut live = 1usize;

    for t in 2..=n {
        let loss_t = input.loss(t);
        let complexity_t = input.complexity(t);
        let mut j = live - 1;
        let mut w = 1u64;
        let mut lambda = crossover_raw(
            input.loss(models[j]),
            input.complexity(models[j]),
            loss_t,
            complexity_t,
        );
        while j > 0 && lambda >= upper[j] {
            j -= 1;
            w += 1;
            lambda = crossover_raw(
                input.loss(models[j]),
                input.complexity(models[j]),
                loss_t,
                complexity_t,
            );
        }
        models[j + 1] = t;
        upper[j + 1] = lambda;
        live = j + 2;
        per_step.push(w);
    }

    models.truncate(live);
    upper.truncate(live);
    upper.push(0.0);

    let total = per_step.iter().sum();
    (
        SelectionPath::from_raw(models, upper),
        IterationStats { per_step, total },
    )
}

/// Smallest model minimizing `L_k + penalty * r_k`, by direct scan.
///
/// Linear in `N`; this is the independent route the path representation is
/// checked against.
pub fn evaluate_selection(input: &LossSequence, penalty: f64) -> Result<usize> {
    if !penalty.is_finite() || penalty < 0.0 {
        return Err(Error::NegativePenalty);
    }
    let mut best_model = 1usize;
    let mut best_cost = input.loss(1) + penalty * input.complexity(1);
    for k in 2..=input.len() {
        let cost = input.loss(k) + penalty * input.complexity(k);
        if cost < best_cost {
            best_cost = cost;
            best_model = k;
        }
    }
    Ok(best_model)
}
