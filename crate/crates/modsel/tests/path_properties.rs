//! Randomized properties of the exact path algorithm: agreement with the
//! direct per-penalty scan, iteration-count bounds, structural contracts,
//! and invariance under affine changes of the loss values.

mod common;

use common::{assert_path_structure, continuous_losses, integer_losses, penalty_grid};
use modsel::{evaluate_selection, exact_path, LossSequence};
use proptest::prelude::*;

proptest! {
    /// query_path agrees with the O(N) scan at every grid penalty.
    #[test]
    fn oracle_equivalence_continuous(input in continuous_losses(200)) {
        let (path, _) = exact_path(&input);
        if path.model_count() < 2 {
            prop_assert_eq!(evaluate_selection(&input, 1.0).unwrap(), 1);
            return Ok(());
        }
        for lam in penalty_grid(&path) {
            let direct = evaluate_selection(&input, lam).unwrap();
            let from_path = path.query(lam).unwrap();
            prop_assert_eq!(direct, from_path, "disagree at penalty {}", lam);
        }
    }

    /// Same agreement when crossover ties are common (integer gaps).
    #[test]
    fn oracle_equivalence_with_ties(input in integer_losses(120)) {
        let (path, _) = exact_path(&input);
        if path.model_count() < 2 {
            return Ok(());
        }
        for lam in penalty_grid(&path) {
            prop_assert_eq!(
                evaluate_selection(&input, lam).unwrap(),
                path.query(lam).unwrap(),
                "disagree at penalty {}", lam
            );
        }
    }

    /// Total iterations W_N stay within [N-1, 2N-3] and satisfy
    /// W_N = 2N - 1 - M_N; each step does at least one unit of work. The
    /// upper bound is also the linear-time certificate.
    #[test]
    fn iteration_bounds_and_identity(input in continuous_losses(300)) {
        let n = input.len();
        let (path, stats) = exact_path(&input);
        let total = stats.total();
        prop_assert_eq!(stats.per_step().len(), n.saturating_sub(1));
        prop_assert_eq!(stats.per_step().iter().sum::<u64>(), total);
        prop_assert!(stats.per_step().iter().all(|&w| w >= 1));
        prop_assert_eq!(total, (2 * n - 1 - path.model_count()) as u64);
        if n >= 2 {
            prop_assert!((n as u64 - 1) <= total && total <= (2 * n as u64 - 3),
                "N={} W={} out of bounds", n, total);
        } else {
            prop_assert_eq!(total, 0);
        }
    }

    #[test]
    fn structure_holds(input in integer_losses(300)) {
        let (path, _) = exact_path(&input);
        assert_path_structure(input.len(), &path);
    }

    /// Explicit complexities r_k = k produce bitwise the same output as the
    /// implicit default.
    #[test]
    fn generalization_consistency(input in continuous_losses(200)) {
        let complexities: Vec<f64> = (1..=input.len()).map(|k| k as f64).collect();
        let explicit =
            LossSequence::with_complexities(input.losses().to_vec(), complexities).unwrap();
        let (path_a, stats_a) = exact_path(&input);
        let (path_b, stats_b) = exact_path(&explicit);
        prop_assert_eq!(path_a.models(), path_b.models());
        prop_assert_eq!(path_a.breakpoints(), path_b.breakpoints());
        prop_assert_eq!(stats_a.per_step(), stats_b.per_step());
    }

    /// Scaling by a power of two is exact in floating point: the models are
    /// unchanged and every finite breakpoint scales bitwise.
    #[test]
    fn affine_scale_power_of_two(input in continuous_losses(150), exp in -8i32..=8) {
        let a = (2.0f64).powi(exp);
        let scaled =
            LossSequence::new(input.losses().iter().map(|l| l * a).collect()).unwrap();
        let (base, _) = exact_path(&input);
        let (path, _) = exact_path(&scaled);
        prop_assert_eq!(base.models(), path.models());
        let expected: Vec<f64> = base.breakpoints().iter().map(|b| b * a).collect();
        prop_assert_eq!(path.breakpoints(), &expected[..]);
    }

    /// General positive scaling preserves the model set and scales
    /// breakpoints up to rounding.
    #[test]
    fn affine_scale_general(input in continuous_losses(150), a in 0.01f64..100.0) {
        let scaled =
            LossSequence::new(input.losses().iter().map(|l| l * a).collect()).unwrap();
        let (base, _) = exact_path(&input);
        let (path, _) = exact_path(&scaled);
        prop_assert_eq!(base.models(), path.models());
        for (got, want) in path.breakpoints().iter().zip(base.breakpoints()) {
            if want.is_finite() && *want > 0.0 {
                prop_assert!((got - want * a).abs() <= 1e-10 * want * a,
                    "breakpoint {} vs {}", got, want * a);
            }
        }
    }

    /// Adding a constant to all losses cancels out of every crossover: the
    /// path is unchanged up to the cancellation rounding.
    #[test]
    fn affine_shift(input in continuous_losses(150), c in -1000.0f64..1000.0) {
        let shifted =
            LossSequence::new(input.losses().iter().map(|l| l + c).collect()).unwrap();
        let (base, _) = exact_path(&input);
        let (path, _) = exact_path(&shifted);
        prop_assert_eq!(base.models(), path.models());
        for (got, want) in path.breakpoints().iter().zip(base.breakpoints()) {
            if want.is_finite() && *want > 0.0 {
                prop_assert!((got - want).abs() <= 1e-9 * want.max(1.0),
                    "breakpoint {} vs {}", got, want);
            }
        }
    }
}
