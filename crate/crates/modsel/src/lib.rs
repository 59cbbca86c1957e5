//! Exact penalized model selection over a decreasing loss sequence.
//!
//! Given losses `L_1 > L_2 > … > L_N` for models of increasing complexity,
//! the penalized selection `k*(λ) = argmin_k L_k + λ·k` is a piecewise
//! constant, non-increasing function of the penalty `λ ≥ 0`. [`exact_path`]
//! computes its full breakpoint representation in linear time; the
//! [`baselines`] module has a quadratic-time path algorithm and a grid
//! search for comparison.
//!
//! The [`segmentation`] module generates realistic loss sequences from
//! changepoint problems (greedy binary segmentation and an exact dynamic
//! program), and [`intervals`] turns a path plus per-model errors into the
//! penalty intervals that reach minimum error — the training targets of
//! supervised penalty learning.
//!
//! ```
//! use modsel::{exact_path, LossSequence};
//!
//! let input = LossSequence::new(vec![4.0, 3.0, 2.0, 1.0, 0.0]).unwrap();
//! let (path, stats) = exact_path(&input);
//! assert_eq!(path.models(), &[1, 5]);
//! assert_eq!(path.breakpoints(), &[f64::INFINITY, 1.0, 0.0]);
//! assert_eq!(stats.total(), 7);
//! ```

pub mod baselines;
mod error;
pub mod intervals;
mod loss;
mod path;
pub mod segmentation;

pub use error::{Error, Result};
pub use loss::{prune_dominated, LossSequence};
pub use path::{
    crossover_penalty, evaluate_selection, exact_path, IterationStats, SelectionPath,
};
