#![allow(dead_code)]

use modsel::{LossSequence, SelectionPath};
use proptest::prelude::*;

/// Build a strictly decreasing loss sequence ending at 0 from positive gaps.
pub fn losses_from_gaps(gaps: &[f64]) -> LossSequence {
    let n = gaps.len() + 1;
    let mut losses = vec![0.0; n];
    for i in (0..n - 1).rev() {
        losses[i] = losses[i + 1] + gaps[i];
    }
    LossSequence::new(losses).expect("positive gaps give strictly decreasing losses")
}

/// Random losses with continuous gaps: crossover ties have probability zero.
pub fn continuous_losses(max_n: usize) -> impl Strategy<Value = LossSequence> {
    prop::collection::vec(0.1f64..10.0, 0..max_n).prop_map(|gaps| losses_from_gaps(&gaps))
}

/// Random losses with small integer gaps: exact arithmetic and frequent
/// crossover ties, exercising the tie-breaking paths.
pub fn integer_losses(max_n: usize) -> impl Strategy<Value = LossSequence> {
    prop::collection::vec(1u8..=4, 0..max_n)
        .prop_map(|gaps| losses_from_gaps(&gaps.iter().map(|&g| g as f64).collect::<Vec<_>>()))
}

/// Uniform 1000-point grid over (0, 2·(largest finite breakpoint)].
///
/// Points that land within relative 1e-9 of a breakpoint are displaced just
/// below it: at a breakpoint the two meeting cost lines differ by less than
/// the rounding noise of evaluating them, so which side wins is not defined
/// by the arithmetic. Off that sliver, the separation dominates the noise
/// and the selection is exact.
pub fn penalty_grid(path: &SelectionPath) -> Vec<f64> {
    assert!(path.model_count() >= 2, "grid needs a finite breakpoint");
    let finite: Vec<f64> = path.breakpoints()[1..path.model_count()].to_vec();
    let top = finite[0];
    let step = 2.0 * top / 1000.0;
    (1..=1000)
        .filter_map(|i| displace(step * i as f64, &finite))
        .collect()
}

fn displace(lam: f64, breakpoints: &[f64]) -> Option<f64> {
    let margin = |b: f64| 1e-9 * (1.0 + b);
    let clear = |x: f64| breakpoints.iter().all(|&b| (x - b).abs() > margin(b));
    match breakpoints.iter().find(|&&b| (lam - b).abs() <= margin(b)) {
        None => Some(lam),
        Some(&b) => [b - 1e-6 * (1.0 + b), b / 2.0]
            .into_iter()
            .find(|&x| x > 0.0 && clear(x)),
    }
}

/// Structural contract of a selection path for the given input size.
pub fn assert_path_structure(n: usize, path: &SelectionPath) {
    let models = path.models();
    let bp = path.breakpoints();
    let m = path.model_count();
    assert_eq!(models.len(), m);
    assert_eq!(bp.len(), m + 1);
    assert_eq!(models[0], 1, "first model must be 1");
    assert_eq!(models[m - 1], n, "last model must be N");
    assert!(models.windows(2).all(|w| w[0] < w[1]), "models must increase");
    assert_eq!(bp[0], f64::INFINITY);
    assert_eq!(bp[m], 0.0);
    assert!(
        bp.windows(2).all(|w| w[0] > w[1]),
        "breakpoints must strictly decrease: {bp:?}"
    );
}
