//! Penalty values that reach minimum-error models.
//!
//! Given a selection path and an error for each model, the penalties whose
//! selected model attains the minimum error form a union of intervals on the
//! penalty axis. These functions compute that union and pick the widest
//! member on a relative scale.

use crate::error::{Error, Result};
use crate::path::SelectionPath;

/// One error value per model of a selection path, finite and non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCurve {
    errors: Vec<f64>,
}

impl ErrorCurve {
    pub fn new(errors: Vec<f64>) -> Result<Self> {
        if errors.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(index) = errors.iter().position(|e| !e.is_finite() || *e < 0.0) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self { errors })
    }

    pub fn errors(&self) -> &[f64] {
        &self.errors
    }
}

/// Penalty intervals attaining the optimal error, in increasing penalty
/// order. Each entry is `(min_penalty, max_penalty)`; the last may extend to
/// infinity. The shared optimum is `min_error`.
#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyIntervalSet {
    pub intervals: Vec<(f64, f64)>,
    pub min_error: f64,
}

/// Compute the penalty intervals on which the selected model has minimum
/// error among the models the path ever selects. Consecutive path intervals
/// with optimal error merge into one.
///
/// `errors` must have one entry per model of `path`.
pub fn target_intervals(path: &SelectionPath, errors: &ErrorCurve) -> Result<PenaltyIntervalSet> {
    if errors.errors().len() != path.model_count() {
        return Err(Error::LengthMismatch {
            expected: path.model_count(),
            actual: errors.errors().len(),
        });
    }
    let errs = errors.errors();
    let min_error = errs.iter().cloned().fold(f64::INFINITY, f64::min);

    // Walk path intervals in increasing penalty order: model i sits on
    // (breakpoints[i+1], breakpoints[i]), so reverse model order.
    let bp = path.breakpoints();
    let mut intervals = Vec::new();
    let mut open: Option<(f64, f64)> = None;
    for i in (0..path.model_count()).rev() {
        if errs[i] == min_error {
            let (lo, hi) = (bp[i + 1], bp[i]);
            open = match open {
                // Adjacent optimal intervals share an endpoint; merge.
                Some((a, _)) => Some((a, hi)),
                None => Some((lo, hi)),
            };
        } else if let Some(done) = open.take() {
            intervals.push(done);
        }
    }
    if let Some(done) = open {
        intervals.push(done);
    }
    Ok(PenaltyIntervalSet { intervals, min_error })
}

/// The target interval that is widest on a log scale, i.e. maximizes
/// `max_penalty / min_penalty`. An unbounded interval always wins; among
/// equally wide intervals the one at larger penalties wins.
pub fn widest_target(targets: &PenaltyIntervalSet) -> Result<(f64, f64)> {
    let mut best: Option<((f64, f64), f64)> = None;
    for &(lo, hi) in &targets.intervals {
        // Both (0, b) and (b, inf) are unbounded in log space; ties between
        // them fall to the larger-penalty interval, which sorts later.
        let width = if hi == f64::INFINITY || lo == 0.0 { f64::INFINITY } else { hi / lo };
        let better = match &best {
            None => true,
            Some((_, w)) => width >= *w,
        };
        if better {
            best = Some(((lo, hi), width));
        }
    }
    best.map(|(iv, _)| iv).ok_or(Error::EmptyIntervalSet)
}
