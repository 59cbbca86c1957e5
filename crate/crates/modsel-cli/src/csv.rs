//! CSV readers and writers. All numbers render through `Display`, which
//! round-trips f64 exactly and writes infinity as `inf`; files are UTF-8
//! with LF line endings.

use std::fmt::Write as _;
use std::path::Path;

use modsel::baselines::GridResult;
use modsel::intervals::PenaltyIntervalSet;
use modsel::segmentation::{DataSequence, SegmentationPath};
use modsel::{IterationStats, LossSequence, SelectionPath};

use crate::error::CliError;

fn parse_field<T: std::str::FromStr>(field: &str, line: usize, what: &str) -> Result<T, CliError> {
    field.trim().parse().map_err(|_| CliError::Parse {
        line,
        message: format!("invalid {what}: {field:?}"),
    })
}

fn split_line(line: &str) -> Vec<&str> {
    line.split(',').collect()
}

/// Losses CSV: `model_size,loss` with an optional third `complexity` column.
/// Rows must appear in model-size order 1..N.
pub fn read_losses(path: &Path) -> Result<(Vec<f64>, Option<Vec<f64>>), CliError> {
    let text = std::fs::read_to_string(path).map_err(CliError::Io)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| CliError::Parse {
        line: 1,
        message: "empty file, expected losses CSV header".into(),
    })?;
    let cols = match header {
        "model_size,loss" => 2,
        "model_size,loss,complexity" => 3,
        _ => {
            return Err(CliError::Parse {
                line: 1,
                message: format!("expected header model_size,loss[,complexity], got {header:?}"),
            });
        }
    };
    let mut losses = Vec::new();
    let mut complexities = if cols == 3 { Some(Vec::new()) } else { None };
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields = split_line(line);
        if fields.len() != cols {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("expected {cols} fields, got {}", fields.len()),
            });
        }
        let size: usize = parse_field(fields[0], lineno, "model_size")?;
        if size != losses.len() + 1 {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("model_size {size} out of order, expected {}", losses.len() + 1),
            });
        }
        losses.push(parse_field(fields[1], lineno, "loss")?);
        if let Some(c) = complexities.as_mut() {
            c.push(parse_field(fields[2], lineno, "complexity")?);
        }
    }
    Ok((losses, complexities))
}

/// Data CSV: `index,value`, indices 1..p in order.
pub fn read_data(path: &Path) -> Result<DataSequence, CliError> {
    let text = std::fs::read_to_string(path).map_err(CliError::Io)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| CliError::Parse {
        line: 1,
        message: "empty file, expected data CSV header".into(),
    })?;
    if header != "index,value" {
        return Err(CliError::Parse {
            line: 1,
            message: format!("expected header index,value, got {header:?}"),
        });
    }
    let mut values = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields = split_line(line);
        if fields.len() != 2 {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("expected 2 fields, got {}", fields.len()),
            });
        }
        let index: usize = parse_field(fields[0], lineno, "index")?;
        if index != values.len() + 1 {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("index {index} out of order, expected {}", values.len() + 1),
            });
        }
        values.push(parse_field(fields[1], lineno, "value")?);
    }
    DataSequence::new(values).map_err(CliError::Invalid)
}

/// Errors CSV: `model_size,error`, one row per input model in order.
pub fn read_errors(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(CliError::Io)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| CliError::Parse {
        line: 1,
        message: "empty file, expected errors CSV header".into(),
    })?;
    if header != "model_size,error" {
        return Err(CliError::Parse {
            line: 1,
            message: format!("expected header model_size,error, got {header:?}"),
        });
    }
    let mut errors = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields = split_line(line);
        if fields.len() != 2 {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("expected 2 fields, got {}", fields.len()),
            });
        }
        let size: usize = parse_field(fields[0], lineno, "model_size")?;
        if size != errors.len() + 1 {
            return Err(CliError::Parse {
                line: lineno,
                message: format!("model_size {size} out of order, expected {}", errors.len() + 1),
            });
        }
        errors.push(parse_field(fields[1], lineno, "error")?);
    }
    Ok(errors)
}

/// Path CSV: one row per selected model, increasing model size, with the
/// open penalty interval on which it is selected.
pub fn write_path(input: &LossSequence, path: &SelectionPath) -> String {
    let mut out = String::from("model_size,min_lambda,max_lambda\n");
    let bp = path.breakpoints();
    for (i, &model) in path.models().iter().enumerate() {
        let size = input.complexity(model);
        let _ = writeln!(out, "{size},{},{}", bp[i + 1], bp[i]);
    }
    out
}

/// Stats CSV: `t,w` for t = 2..N.
pub fn write_stats(stats: &IterationStats) -> String {
    let mut out = String::from("t,w\n");
    for (i, w) in stats.per_step().iter().enumerate() {
        let _ = writeln!(out, "{},{w}", i + 2);
    }
    out
}

pub fn write_losses(losses: &[f64]) -> String {
    let mut out = String::from("model_size,loss\n");
    for (i, l) in losses.iter().enumerate() {
        let _ = writeln!(out, "{},{l}", i + 1);
    }
    out
}

pub fn write_data(data: &DataSequence) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in data.values().iter().enumerate() {
        let _ = writeln!(out, "{},{v}", i + 1);
    }
    out
}

/// Grid CSV: `lambda,model_size` rows, then an `approx_breakpoint` section.
pub fn write_grid(result: &GridResult) -> String {
    let mut out = String::from("lambda,model_size\n");
    for (lam, sel) in result.penalties().iter().zip(result.selected()) {
        let _ = writeln!(out, "{lam},{sel}");
    }
    out.push_str("approx_breakpoint\n");
    for b in result.approx_breakpoints() {
        let _ = writeln!(out, "{b}");
    }
    out
}

/// Changepoints CSV: for each model size, its sorted changepoints.
pub fn write_changepoints(seg: &SegmentationPath) -> String {
    let mut out = String::from("model_size,changepoint\n");
    for k in 1..=seg.max_models() {
        for cp in seg.changepoints(k) {
            let _ = writeln!(out, "{k},{cp}");
        }
    }
    out
}

/// Interval CSV: the penalty intervals reaching the minimum error.
pub fn write_intervals(set: &PenaltyIntervalSet) -> String {
    let mut out = String::from("min_lambda,max_lambda,min_error\n");
    for &(lo, hi) in &set.intervals {
        let _ = writeln!(out, "{lo},{hi},{}", set.min_error);
    }
    out
}
