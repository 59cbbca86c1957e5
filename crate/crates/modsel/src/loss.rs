//! Validated loss sequences: the input contract for every path algorithm.

use crate::error::{Error, Result};

/// Strictly decreasing loss values `L_1 > ... > L_N`, one per candidate model,
/// with optional strictly increasing model complexities `r_1 < ... < r_N`.
///
/// When no complexities are given, model `k` has implied complexity `k`.
/// Model indices are 1-based throughout the crate.
#[derive(Debug, Clone, PartialEq)]
pub struct LossSequence {
    losses: Vec<f64>,
    complexities: Option<Vec<f64>>,
}

fn check_finite(values: &[f64]) -> Result<()> {
    if let Some(index) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue { index });
    }
    Ok(())
}

impl LossSequence {
    /// Validates `losses` (non-empty, finite, strictly decreasing) with implied
    /// complexities `1..=N`.
    pub fn new(losses: Vec<f64>) -> Result<Self> {
        Self::build(losses, None)
    }

    /// Validates `losses` together with explicit complexities, which must be
    /// finite, strictly increasing, and of equal length.
    pub fn with_complexities(losses: Vec<f64>, complexities: Vec<f64>) -> Result<Self> {
        Self::build(losses, Some(complexities))
    }

    fn build(losses: Vec<f64>, complexities: Option<Vec<f64>>) -> Result<Self> {
        if losses.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_finite(&losses)?;
        if let Some(index) = (1..losses.len()).find(|&i| losses[i] >= losses[i - 1]) {
            return Err(Error::NotStrictlyDecreasing { index });
        }
        if let Some(r) = &complexities {
            if r.len() != losses.len() {
                return Err(Error::LengthMismatch {
                    expected: losses.len(),
                    actual: r.len(),
                });
            }
            check_finite(r)?;
            if let Some(index) = (1..r.len()).find(|&i| r[i] <= r[i - 1]) {
                return Err(Error::ComplexityNotIncreasing { index });
            }
        }
        Ok(Self { losses, complexities })
    }

    /// Number of models `N`.
    pub fn len(&self) -> usize {
        self.losses.len()
    }

    /// Always false: an empty sequence cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn losses(&self) -> &[f64] {
        &self.losses
    }

    /// Explicit complexities, if any were supplied.
    pub fn complexities(&self) -> Option<&[f64]> {
        self.complexities.as_deref()
    }

    /// Loss of 1-based model `k`.
    #[inline]
    pub fn loss(&self, model: usize) -> f64 {
        self.losses[model - 1]
    }

    /// Complexity of 1-based model `k`; defaults to `k` itself.
    #[inline]
    pub fn complexity(&self, model: usize) -> f64 {
        match &self.complexities {
            Some(r) => r[model - 1],
            None => model as f64,
        }
    }
}

/// Keeps exactly the strict prefix-minima of `raw_losses`: model 1 always, and
/// model `t` iff its loss is strictly below every kept predecessor's loss.
///
/// Dominated models are never selected at any penalty, so dropping them
/// preserves the model selection function. The returned sequence carries the
/// kept models' original 1-based positions as complexities, and the same
/// positions in the index map, so downstream paths report original model sizes.
pub fn prune_dominated(raw_losses: &[f64]) -> Result<(LossSequence, Vec<usize>)> {
    if raw_losses.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_finite(raw_losses)?;

    let mut losses = Vec::with_capacity(raw_losses.len());
    let mut index_map = Vec::with_capacity(raw_losses.len());
    let mut best = f64::INFINITY;
    for (i, &loss) in raw_losses.iter().enumerate() {
        if loss < best {
            losses.push(loss);
            index_map.push(i + 1);
            best = loss;
        }
    }

    let complexities = index_map.iter().map(|&k| k as f64).collect();
    let seq = LossSequence::with_complexities(losses, complexities)
        .expect("prefix minima are strictly decreasing");
    Ok((seq, index_map))
}
