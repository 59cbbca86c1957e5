//! Loss-sequence generators for changepoint problems: greedy binary
//! segmentation, an exact per-model-count dynamic program, and the synthetic
//! data and loss formulas used by the scaling experiments.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::loss::LossSequence;

/// Real-valued sequential observations, finite and non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct DataSequence {
    values: Vec<f64>,
}

impl DataSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Square-loss segment costs in O(1) via cumulative sums. The cancellation
/// this incurs is bounded by the recomputation checks in the test suite.
#[derive(Debug, Clone)]
struct SegmentCost {
    prefix_sum: Vec<f64>,
    prefix_sq: Vec<f64>,
}

impl SegmentCost {
    fn new(values: &[f64]) -> Self {
        let mut prefix_sum = Vec::with_capacity(values.len() + 1);
        let mut prefix_sq = Vec::with_capacity(values.len() + 1);
        prefix_sum.push(0.0);
        prefix_sq.push(0.0);
        let (mut s, mut q) = (0.0, 0.0);
        for &v in values {
            s += v;
            q += v * v;
            prefix_sum.push(s);
            prefix_sq.push(q);
        }
        Self { prefix_sum, prefix_sq }
    }

    /// Sum of squared deviations from the mean over 0-based inclusive [a, b].
    #[inline]
    fn ss(&self, a: usize, b: usize) -> f64 {
        let len = (b - a + 1) as f64;
        let sum = self.prefix_sum[b + 1] - self.prefix_sum[a];
        let sq = self.prefix_sq[b + 1] - self.prefix_sq[a];
        (sq - sum * sum / len).max(0.0)
    }

    /// Mean over 0-based inclusive [a, b].
    #[inline]
    fn mean(&self, a: usize, b: usize) -> f64 {
        (self.prefix_sum[b + 1] - self.prefix_sum[a]) / (b - a + 1) as f64
    }
}

/// One candidate split of a leaf segment, ordered so the heap pops the
/// largest gain first, then the leftmost segment, then the leftmost cut.
#[derive(Debug, Clone)]
struct SplitCandidate {
    gain: f64,
    start: usize,
    end: usize,
    cut: usize, // 0-based last index of the left child
}

impl PartialEq for SplitCandidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SplitCandidate {}

impl PartialOrd for SplitCandidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SplitCandidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .total_cmp(&other.gain)
            .then_with(|| other.start.cmp(&self.start))
            .then_with(|| other.cut.cmp(&self.cut))
    }
}

fn best_split(cost: &SegmentCost, start: usize, end: usize) -> SplitCandidate {
    debug_assert!(end > start);
    let parent = cost.ss(start, end);
    let mut best_cut = start;
    let mut best_children = f64::INFINITY;
    for cut in start..end {
        let children = cost.ss(start, cut) + cost.ss(cut + 1, end);
        if children < best_children {
            best_children = children;
            best_cut = cut;
        }
    }
    SplitCandidate {
        gain: parent - best_children,
        start,
        end,
        cut: best_cut,
    }
}

#[derive(Debug)]
enum Changes {
    /// Greedy splits are nested: model k uses the first k-1 cut positions.
    Nested { split_order: Vec<usize> },
    /// Exact solutions are not nested: one sorted list per model size.
    PerModel { changepoints: Vec<Vec<usize>> },
}

/// Per-model-size segmentations of one data sequence: loss values plus, for
/// each model size `k`, its `k - 1` changepoints and `k` segment means.
///
/// A changepoint after 1-based index `j` separates indices `1..=j` from
/// `j+1..`. Changepoints and means are materialized on demand so that full
/// greedy paths over large sequences stay linear in memory.
#[derive(Debug)]
pub struct SegmentationPath {
    losses: Vec<f64>,
    changes: Changes,
    cost: SegmentCost,
}

impl SegmentationPath {
    /// Largest model size `K` in the path.
    pub fn max_models(&self) -> usize {
        self.losses.len()
    }

    /// Total square loss per model size; entry `k - 1` is the loss with `k`
    /// segments. Non-increasing in `k`.
    pub fn losses(&self) -> &[f64] {
        &self.losses
    }

    pub fn loss(&self, model_size: usize) -> f64 {
        self.losses[model_size - 1]
    }

    /// Sorted 1-based changepoint positions of the `k`-segment model.
    pub fn changepoints(&self, model_size: usize) -> Vec<usize> {
        assert!(
            (1..=self.max_models()).contains(&model_size),
            "model size {model_size} outside path"
        );
        match &self.changes {
            Changes::Nested { split_order } => {
                let mut cps: Vec<usize> = split_order[..model_size - 1].to_vec();
                cps.sort_unstable();
                cps
            }
            Changes::PerModel { changepoints } => changepoints[model_size - 1].clone(),
        }
    }

    /// Segment means of the `k`-segment model, left to right.
    pub fn means(&self, model_size: usize) -> Vec<f64> {
        let cps = self.changepoints(model_size);
        let p = self.cost.prefix_sum.len() - 1;
        let mut means = Vec::with_capacity(model_size);
        let mut start = 0usize;
        for &cp in &cps {
            means.push(self.cost.mean(start, cp - 1));
            start = cp;
        }
        means.push(self.cost.mean(start, p - 1));
        means
    }
}

fn check_max_models(max_models: usize, len: usize) -> Result<()> {
    if max_models == 0 || max_models > len {
        return Err(Error::MaxModelsOutOfRange { max_models, len });
    }
    Ok(())
}

/// Greedy recursive splitting: model 1 is the global mean, and each further
/// model applies the single split with the largest loss decrease anywhere in
/// the current segmentation (ties to the leftmost segment, then leftmost
/// position). A heap of per-segment best splits keeps the full path
/// log-linear on average.
pub fn binary_segmentation(data: &DataSequence, max_models: usize) -> Result<SegmentationPath> {
    let p = data.len();
    check_max_models(max_models, p)?;
    let cost = SegmentCost::new(data.values());

    let mut total = cost.ss(0, p - 1);
    let mut losses = Vec::with_capacity(max_models);
    losses.push(total);
    let mut split_order = Vec::with_capacity(max_models - 1);

    let mut heap = BinaryHeap::new();
    if p > 1 {
        heap.push(best_split(&cost, 0, p - 1));
    }
    while losses.len() < max_models {
        let split = heap.pop().expect("a splittable segment exists while k < p");
        total -= split.gain;
        losses.push(total);
        split_order.push(split.cut + 1);
        if split.cut > split.start {
            heap.push(best_split(&cost, split.start, split.cut));
        }
        if split.end > split.cut + 1 {
            heap.push(best_split(&cost, split.cut + 1, split.end));
        }
    }

    Ok(SegmentationPath {
        losses,
        changes: Changes::Nested { split_order },
        cost,
    })
}

/// Exact minimum square loss for every model size up to `max_models`, by
/// dynamic programming over (segment count, last index); `O(K p^2)` time.
/// Ties on the last-segment start resolve to the earliest position.
pub fn exact_segmentation(data: &DataSequence, max_models: usize) -> Result<SegmentationPath> {
    let p = data.len();
    check_max_models(max_models, p)?;
    let cost = SegmentCost::new(data.values());

    // dp[(k-1)*p + j]: optimal loss of points 0..=j split into k segments.
    let mut dp = vec![f64::INFINITY; max_models * p];
    let mut prev = vec![0usize; max_models * p];
    for (j, slot) in dp[..p].iter_mut().enumerate() {
        *slot = cost.ss(0, j);
    }
    for k in 2..=max_models {
        let (done, row) = dp.split_at_mut((k - 1) * p);
        let below = &done[(k - 2) * p..];
        for j in (k - 1)..p {
            let mut best = f64::INFINITY;
            let mut best_s = k - 2;
            for (s, &left) in below.iter().enumerate().take(j).skip(k - 2) {
                let candidate = left + cost.ss(s + 1, j);
                if candidate < best {
                    best = candidate;
                    best_s = s;
                }
            }
            row[j] = best;
            prev[(k - 1) * p + j] = best_s;
        }
    }

    let mut losses = Vec::with_capacity(max_models);
    let mut changepoints = Vec::with_capacity(max_models);
    for k in 1..=max_models {
        losses.push(dp[(k - 1) * p + (p - 1)]);
        let mut cps = Vec::with_capacity(k - 1);
        let mut j = p - 1;
        for level in (2..=k).rev() {
            let s = prev[(level - 1) * p + j];
            cps.push(s + 1);
            j = s;
        }
        cps.reverse();
        changepoints.push(cps);
    }

    Ok(SegmentationPath {
        losses,
        changes: Changes::PerModel { changepoints },
        cost,
    })
}

/// Synthetic data sequence `values[j] = sin(j) + j/n` for `j = 1..=n`.
pub fn synth_data(n: usize) -> DataSequence {
    assert!(n >= 1, "data sequence needs at least one point");
    let values = (1..=n)
        .map(|j| (j as f64).sin() + j as f64 / n as f64)
        .collect();
    DataSequence::new(values).expect("sin formula is finite")
}

/// Shape of a synthetic loss sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossShape {
    /// `L_t = n - t`: only two models end up selected.
    Linear,
    /// `L_t = n - sqrt(t)`: every model ends up selected.
    Sqrt,
}

/// Synthetic strictly decreasing losses of the given shape.
pub fn synth_losses(n: usize, shape: LossShape) -> LossSequence {
    assert!(n >= 1, "loss sequence needs at least one model");
    let losses: Vec<f64> = match shape {
        LossShape::Linear => (1..=n).map(|t| (n - t) as f64).collect(),
        LossShape::Sqrt => (1..=n).map(|t| n as f64 - (t as f64).sqrt()).collect(),
    };
    LossSequence::new(losses).expect("synthetic losses are strictly decreasing")
}
