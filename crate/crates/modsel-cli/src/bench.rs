//! Wall-clock benchmark harness. Every measurement runs one untimed warm-up
//! followed by `repeats` timed runs, sequentially on one thread; the CSV
//! reports the median, and mean/SD go to stderr for noise diagnosis.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use modsel::baselines::{default_grid, grid_search, quadratic_path};
use modsel::segmentation::{binary_segmentation, synth_data, synth_losses, LossShape};
use modsel::{exact_path, prune_dominated};

use crate::error::CliError;

pub struct BenchRecord {
    pub algorithm: String,
    pub n: usize,
    pub g: Option<usize>,
    pub seconds: f64,
    pub iterations: Option<u64>,
    pub mean: f64,
    pub sd: f64,
}

fn timings<F: FnMut()>(repeats: usize, mut f: F) -> Vec<f64> {
    f(); // warm-up, excluded
    (0..repeats)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64()
        })
        .collect()
}

fn record(
    algorithm: &str,
    n: usize,
    g: Option<usize>,
    iterations: Option<u64>,
    samples: &[f64],
) -> BenchRecord {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let seconds = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    };
    let mean = samples.iter().sum::<f64>() / samples.len() as f64;
    let var = samples.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>()
        / samples.len() as f64;
    BenchRecord {
        algorithm: algorithm.into(),
        n,
        g,
        seconds,
        iterations,
        mean,
        sd: var.sqrt(),
    }
}

fn check_sizes(sizes: &[usize]) -> Result<(), CliError> {
    if sizes.is_empty() {
        return Err(CliError::BadArgs("at least one size is required".into()));
    }
    if let Some(&bad) = sizes.iter().find(|&&s| s < 2) {
        return Err(CliError::BadArgs(format!("size {bad} too small, need ≥ 2")));
    }
    Ok(())
}

/// Linear vs quadratic selection on sqrt-shaped losses (the quadratic
/// baseline's worst case) at each size.
pub fn selection_scaling(sizes: &[usize], repeats: usize) -> Result<Vec<BenchRecord>, CliError> {
    check_sizes(sizes)?;
    let mut records = Vec::new();
    for &n in sizes {
        let input = synth_losses(n, LossShape::Sqrt);
        let w = exact_path(&input).1.total();
        let t = timings(repeats, || {
            black_box(exact_path(black_box(&input)));
        });
        records.push(record("linear", n, None, Some(w), &t));
        let t = timings(repeats, || {
            black_box(quadratic_path(black_box(&input)));
        });
        records.push(record("quadratic", n, None, None, &t));
    }
    Ok(records)
}

/// The two-step pipeline at each data size: binary segmentation over the
/// synthetic sin sequence, then each selection algorithm on the pruned
/// segmentation losses.
pub fn pipeline(sizes: &[usize], repeats: usize) -> Result<Vec<BenchRecord>, CliError> {
    check_sizes(sizes)?;
    let mut records = Vec::new();
    for &p in sizes {
        let data = synth_data(p);
        let t = timings(repeats, || {
            black_box(binary_segmentation(black_box(&data), p).unwrap());
        });
        records.push(record("binseg", p, None, None, &t));

        let seg = binary_segmentation(&data, p).map_err(CliError::Invalid)?;
        let (losses, _) = prune_dominated(seg.losses()).map_err(CliError::Invalid)?;
        let w = exact_path(&losses).1.total();
        let t = timings(repeats, || {
            black_box(exact_path(black_box(&losses)));
        });
        records.push(record("linear", p, None, Some(w), &t));
        let t = timings(repeats, || {
            black_box(quadratic_path(black_box(&losses)));
        });
        records.push(record("quadratic", p, None, None, &t));
    }
    Ok(records)
}

/// Exact path versus grid search at each grid size on one fixed sqrt-shaped
/// loss sequence.
pub fn gridsearch_compare(
    n: usize,
    grid_sizes: &[usize],
    repeats: usize,
) -> Result<Vec<BenchRecord>, CliError> {
    if n < 2 {
        return Err(CliError::BadArgs(format!("n = {n} too small, need ≥ 2")));
    }
    if grid_sizes.is_empty() {
        return Err(CliError::BadArgs("at least one grid size is required".into()));
    }
    let input = synth_losses(n, LossShape::Sqrt);
    let mut records = Vec::new();
    let w = exact_path(&input).1.total();
    let t = timings(repeats, || {
        black_box(exact_path(black_box(&input)));
    });
    records.push(record("linear", n, None, Some(w), &t));
    for &g in grid_sizes {
        let grid = default_grid(&input, g).map_err(CliError::Invalid)?;
        let t = timings(repeats, || {
            black_box(grid_search(black_box(&input), black_box(&grid)).unwrap());
        });
        records.push(record("gridsearch", n, Some(g), None, &t));
    }
    Ok(records)
}

pub fn write_bench(records: &[BenchRecord]) -> String {
    let mut out = String::from("algorithm,n,g,seconds,iterations\n");
    for r in records {
        let g = r.g.map(|g| g.to_string()).unwrap_or_default();
        let iters = r.iterations.map(|w| w.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{},{},{g},{},{iters}", r.algorithm, r.n, r.seconds);
    }
    out
}

pub fn log_records(records: &[BenchRecord]) {
    for r in records {
        let g = r.g.map(|g| format!(" g={g}")).unwrap_or_default();
        eprintln!(
            "bench: {} n={}{g} median={:.6}s mean={:.6}s sd={:.6}s",
            r.algorithm, r.n, r.seconds, r.mean, r.sd
        );
    }
}
