//! `modsel` — penalized model selection over decreasing losses, as CSV in,
//! CSV out. See README for the file formats.

mod bench;
mod csv;
mod error;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;
use modsel::baselines::{default_grid, grid_search, quadratic_path};
use modsel::intervals::{target_intervals, widest_target, ErrorCurve, PenaltyIntervalSet};
use modsel::segmentation::{binary_segmentation, exact_segmentation, synth_data, synth_losses, LossShape};
use modsel::{exact_path, prune_dominated, LossSequence};

#[derive(Parser)]
#[command(name = "modsel", version, about = "Exact penalized model selection paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full selection path of a loss sequence
    Path(PathArgs),
    /// Evaluate the selection at a grid of penalties
    Gridsearch(GridArgs),
    /// Segment a data sequence into per-model-size losses
    Binseg(BinsegArgs),
    /// Generate synthetic data or loss sequences
    Synth(SynthArgs),
    /// Time the algorithms and write timing records
    Bench(BenchArgs),
    /// Compute penalty intervals reaching the minimum model error
    Targets(TargetArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Linear,
    Quadratic,
}

#[derive(Args)]
struct PathArgs {
    /// Losses CSV (model_size,loss[,complexity])
    losses: PathBuf,
    #[arg(long, value_enum, default_value = "linear")]
    algorithm: Algorithm,
    /// Drop models dominated by a smaller model before computing the path
    #[arg(long)]
    prune: bool,
    /// Drop interior path intervals narrower than this penalty width
    #[arg(long)]
    epsilon: Option<f64>,
    /// Path CSV destination (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Iteration-stats CSV destination (linear algorithm only)
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    /// Losses CSV (model_size,loss[,complexity])
    losses: PathBuf,
    /// Number of geometrically spaced penalties over the default range
    #[arg(long, conflicts_with = "grid")]
    count: Option<usize>,
    /// Explicit comma-separated penalties, strictly increasing
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<f64>>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BinsegArgs {
    /// Data CSV (index,value)
    data: PathBuf,
    /// Largest model size to compute (default: one segment per point)
    #[arg(long)]
    max_models: Option<usize>,
    /// Solve exactly by dynamic programming instead of greedy splitting
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write a changepoints CSV (model_size,changepoint)
    #[arg(long)]
    changepoints: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SynthKind {
    Data,
    LossesLinear,
    LossesSqrt,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    kind: SynthKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scenario {
    SelectionScaling,
    Pipeline,
    GridsearchCompare,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    scenario: Scenario,
    /// Input sizes for selection-scaling (loss count) and pipeline (data size)
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Timed runs per measurement, after one untimed warm-up
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    /// Loss-sequence size for gridsearch-compare
    #[arg(long, default_value_t = 287_443)]
    n: usize,
    /// Grid sizes for gridsearch-compare
    #[arg(long, value_delimiter = ',', default_values_t = [10usize, 100, 1000, 10000])]
    grid_sizes: Vec<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TargetArgs {
    /// Losses CSV (model_size,loss[,complexity])
    losses: PathBuf,
    /// Errors CSV (model_size,error), one row per model of the loss file
    #[arg(long)]
    errors: PathBuf,
    /// Emit only the interval that is widest in log-penalty space
    #[arg(long)]
    widest: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content).map_err(CliError::Io),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_losses(file: &Path, prune: bool) -> Result<LossSequence, CliError> {
    let (losses, complexities) = csv::read_losses(file)?;
    match (complexities, prune) {
        (Some(_), true) => Err(CliError::BadArgs(
            "--prune assumes unit complexities; drop the complexity column".into(),
        )),
        (Some(c), false) => Ok(LossSequence::with_complexities(losses, c)?),
        (None, true) => Ok(prune_dominated(&losses)?.0),
        (None, false) => Ok(LossSequence::new(losses)?),
    }
}

fn run_path(args: &PathArgs) -> Result<(), CliError> {
    let input = load_losses(&args.losses, args.prune)?;
    if args.stats.is_some() && args.algorithm == Algorithm::Quadratic {
        return Err(CliError::BadArgs(
            "iteration stats are defined for the linear algorithm only".into(),
        ));
    }
    let (mut path, stats) = match args.algorithm {
        Algorithm::Linear => exact_path(&input),
        Algorithm::Quadratic => (quadratic_path(&input), Default::default()),
    };
    if let Some(eps) = args.epsilon {
        if eps.is_nan() || eps < 0.0 {
            return Err(CliError::BadArgs(format!("invalid epsilon {eps}")));
        }
        path = path.filter_narrow(eps);
    }
    emit(&args.output, &csv::write_path(&input, &path))?;
    if let Some(stats_file) = &args.stats {
        emit(&Some(stats_file.clone()), &csv::write_stats(&stats))?;
    }
    Ok(())
}

fn run_gridsearch(args: &GridArgs) -> Result<(), CliError> {
    let input = load_losses(&args.losses, false)?;
    let penalties = match (&args.grid, args.count) {
        (Some(grid), _) => grid.clone(),
        (None, Some(count)) => default_grid(&input, count)?,
        (None, None) => {
            return Err(CliError::BadArgs("pass --count or --grid".into()));
        }
    };
    let result = grid_search(&input, &penalties)?;
    emit(&args.output, &csv::write_grid(&result))
}

fn run_binseg(args: &BinsegArgs) -> Result<(), CliError> {
    let data = csv::read_data(&args.data)?;
    let max_models = args.max_models.unwrap_or(data.len());
    let seg = if args.exact {
        exact_segmentation(&data, max_models)?
    } else {
        binary_segmentation(&data, max_models)?
    };
    emit(&args.output, &csv::write_losses(seg.losses()))?;
    if let Some(cp_file) = &args.changepoints {
        emit(&Some(cp_file.clone()), &csv::write_changepoints(&seg))?;
    }
    Ok(())
}

fn run_synth(args: &SynthArgs) -> Result<(), CliError> {
    if args.n < 1 {
        return Err(CliError::BadArgs("--n must be at least 1".into()));
    }
    let content = match args.kind {
        SynthKind::Data => csv::write_data(&synth_data(args.n)),
        SynthKind::LossesLinear => csv::write_losses(synth_losses(args.n, LossShape::Linear).losses()),
        SynthKind::LossesSqrt => csv::write_losses(synth_losses(args.n, LossShape::Sqrt).losses()),
    };
    emit(&args.output, &content)
}

fn run_bench(args: &BenchArgs) -> Result<(), CliError> {
    if args.repeats < 1 {
        return Err(CliError::BadArgs("--repeats must be at least 1".into()));
    }
    let need_sizes = || {
        args.sizes
            .clone()
            .ok_or_else(|| CliError::BadArgs("this scenario needs --sizes".into()))
    };
    let records = match args.scenario {
        Scenario::SelectionScaling => bench::selection_scaling(&need_sizes()?, args.repeats)?,
        Scenario::Pipeline => bench::pipeline(&need_sizes()?, args.repeats)?,
        Scenario::GridsearchCompare => {
            bench::gridsearch_compare(args.n, &args.grid_sizes, args.repeats)?
        }
    };
    bench::log_records(&records);
    emit(&args.output, &bench::write_bench(&records))
}

fn run_targets(args: &TargetArgs) -> Result<(), CliError> {
    let input = load_losses(&args.losses, false)?;
    let errors = csv::read_errors(&args.errors)?;
    if errors.len() != input.len() {
        return Err(CliError::BadArgs(format!(
            "{} error rows for {} models",
            errors.len(),
            input.len()
        )));
    }
    let (path, _) = exact_path(&input);
    let selected_errors: Vec<f64> = path.models().iter().map(|&m| errors[m - 1]).collect();
    let curve = ErrorCurve::new(selected_errors)?;
    let targets = target_intervals(&path, &curve)?;
    let out = if args.widest {
        let best = widest_target(&targets)?;
        csv::write_intervals(&PenaltyIntervalSet {
            intervals: vec![best],
            min_error: targets.min_error,
        })
    } else {
        csv::write_intervals(&targets)
    };
    emit(&args.output, &out)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Path(args) => run_path(args),
        Command::Gridsearch(args) => run_gridsearch(args),
        Command::Binseg(args) => run_binseg(args),
        Command::Synth(args) => run_synth(args),
        Command::Bench(args) => run_bench(args),
        Command::Targets(args) => run_targets(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
