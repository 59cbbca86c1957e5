//! Reference algorithms the single-pass path computation is measured against:
//! the downward-scanning path construction that is quadratic when many models
//! are selected, and approximate grid search.

use crate::error::{Error, Result};
use crate::loss::LossSequence;
use crate::path::{evaluate_selection, SelectionPath};

/// Builds the selection path starting from the largest model.
///
/// From the current model, every smaller candidate's crossover penalty is
/// computed and the smallest one (ties to the smaller candidate) gives the
/// next model up the path, until model 1 is reached. Output is identical,
/// field for field, to [`crate::exact_path`]; cost is `O(N * M)` where `M`
/// is the number of selected models.
pub fn quadratic_path(input: &LossSequence) -> SelectionPath {
    quadratic_path_counted(input).0
}

/// [`quadratic_path`] plus the number of crossover evaluations performed,
/// for work-counting experiments.
pub fn quadratic_path_counted(input: &LossSequence) -> (SelectionPath, u64) {
    let n = input.len();
    let mut models_desc = vec![n];
    let mut breaks_desc = vec![0.0]; // lower boundary of each model's interval
    let mut crossovers = 0u64;

    let mut current = n;
    while current > 1 {
        let loss_cur = input.loss(current);
        let complexity_cur = input.complexity(current);
        let mut next = 1usize;
        let mut next_crossing = f64::INFINITY;
        for k in 1..current {
            let crossing =
                (input.loss(k) - loss_cur) / (complexity_cur - input.complexity(k));
            crossovers += 1;
            if crossing < next_crossing {
                next_crossing = crossing;
                next = k;
            }
        }
        models_desc.push(next);
        breaks_desc.push(next_crossing);
        current = next;
    }

    let models: Vec<usize> = models_desc.into_iter().rev().collect();
    let mut breakpoints = vec![f64::INFINITY];
    breakpoints.extend(breaks_desc.into_iter().rev());
    (SelectionPath::from_raw(models, breakpoints), crossovers)
}

/// Selections of an approximate grid search, in increasing penalty order.
///
/// `approx_breakpoints` holds the geometric mean of each adjacent penalty
/// pair whose selected models differ, also in increasing order (path order
/// reads them reversed).
#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    penalties: Vec<f64>,
    selected: Vec<usize>,
    approx_breakpoints: Vec<f64>,
}

impl GridResult {
    pub fn penalties(&self) -> &[f64] {
        &self.penalties
    }

    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    pub fn approx_breakpoints(&self) -> &[f64] {
        &self.approx_breakpoints
    }
}

/// Evaluates the selection function at each grid penalty by direct scan
/// (`O(N)` per penalty, `O(N G)` total).
///
/// Penalties must be strictly increasing, positive, and finite.
pub fn grid_search(input: &LossSequence, penalties: &[f64]) -> Result<GridResult> {
    if penalties.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(index) = penalties.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFiniteValue { index });
    }
    if penalties[0] <= 0.0 {
        return Err(Error::NegativePenalty);
    }
    if let Some(index) = (1..penalties.len()).find(|&i| penalties[i] <= penalties[i - 1]) {
        return Err(Error::UnsortedGrid { index });
    }

    let selected: Vec<usize> = penalties
        .iter()
        .map(|&p| evaluate_selection(input, p).expect("grid penalties validated"))
        .collect();

    let approx_breakpoints: Vec<f64> = selected
        .windows(2)
        .zip(penalties.windows(2))
        .filter(|(models, _)| models[0] != models[1])
        .map(|(_, pair)| (pair[0] * pair[1]).sqrt())
        .collect();

    Ok(GridResult {
        penalties: penalties.to_vec(),
        selected,
        approx_breakpoints,
    })
}

/// Deterministic geometric grid of `count` penalties.
///
/// The top penalty is the crossover of models 1 and `N` (below it some model
/// beyond 1 is always preferable to model 1) and the bottom is a fixed
/// factor `1e6` below. `count == 1` yields the geometric midpoint.
pub fn default_grid(input: &LossSequence, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::EmptyGrid);
    }
    let n = input.len();
    if n < 2 {
        return Err(Error::DegenerateRange);
    }
    let hi = (input.loss(1) - input.loss(n)) / (input.complexity(n) - input.complexity(1));
    let lo = hi / 1e6;
    if count == 1 {
        return Ok(vec![(lo * hi).sqrt()]);
    }
    let log_lo = lo.ln();
    let log_hi = hi.ln();
    let grid = (0..count)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == count - 1 {
                hi
            } else {
                let frac = i as f64 / (count - 1) as f64;
                (log_lo + frac * (log_hi - log_lo)).exp()
            }
        })
        .collect();
    Ok(grid)
}
