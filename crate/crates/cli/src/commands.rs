use std::fs;
use std::io::Write;

use anyhow::{Context, Result};
use shiftbin::csv::{fmt_sig12, write_pmf_csv};
use shiftbin::ensemble::parse_probability_lines;
use shiftbin::sweep::{write_sweep_csv, DEFAULT_M};
use shiftbin::{
    approximate, bound_report, ehm_bound, ensemble_from_spec, exact_pmf, loc_distance, run_sweep,
    tv_distance, two_param_bound, BernoulliEnsemble, GeneratorKind, Grid, Method,
};

use crate::args::{InputArgs, Metric};
use crate::CliError;

/// Resolves the single probability source given on the command line.
pub fn load_ensemble(input: &InputArgs) -> Result<BernoulliEnsemble, CliError> {
    let sources = [
        input.probs.is_some(),
        input.probs_file.is_some(),
        input.uniform_spread,
    ]
    .iter()
    .filter(|&&given| given)
    .count();
    if sources != 1 {
        return Err(CliError::Usage(
            "give exactly one of --probs, --probs-file or --uniform-spread".into(),
        ));
    }
    if let Some(probs) = &input.probs {
        return BernoulliEnsemble::new(probs.clone())
            .context("invalid --probs")
            .map_err(CliError::Compute);
    }
    if let Some(path) = &input.probs_file {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))
            .map_err(CliError::Compute)?;
        return parse_probability_lines(&text)
            .with_context(|| format!("in {}", path.display()))
            .map_err(CliError::Compute);
    }
    let (Some(m), Some(max_prob)) = (input.m, input.max_prob) else {
        return Err(CliError::Usage(
            "--uniform-spread needs --m and --max-prob".into(),
        ));
    };
    ensemble_from_spec(GeneratorKind::UniformSpread, m, max_prob)
        .context("invalid generator arguments")
        .map_err(CliError::Compute)
}

pub fn require_method(method: Option<Method>) -> Result<Method, CliError> {
    method.ok_or_else(|| {
        let valid: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
        CliError::Usage(format!(
            "--method is required, one of: {}",
            valid.join(", ")
        ))
    })
}

pub fn exact(ensemble: &BernoulliEnsemble, out: &mut dyn Write) -> Result<()> {
    write_pmf_csv(&exact_pmf(ensemble), out)?;
    Ok(())
}

pub fn approx(ensemble: &BernoulliEnsemble, method: Method, out: &mut dyn Write) -> Result<()> {
    let fitted = approximate(ensemble, method)
        .with_context(|| format!("cannot fit {method} approximation"))?;
    let params: Vec<String> = fitted
        .params
        .iter()
        .map(|(name, value)| format!("{name}={}", fmt_sig12(*value)))
        .collect();
    writeln!(out, "# method={method} {}", params.join(" "))?;
    write_pmf_csv(&fitted.dist, out)?;
    Ok(())
}

pub fn distance(
    ensemble: &BernoulliEnsemble,
    method: Method,
    metric: Metric,
    out: &mut dyn Write,
) -> Result<()> {
    let fitted = approximate(ensemble, method)
        .with_context(|| format!("cannot fit {method} approximation"))?;
    let exact = exact_pmf(ensemble);
    let d = match metric {
        Metric::Tv => tv_distance(&exact, &fitted.dist),
        Metric::Loc => loc_distance(&exact, &fitted.dist),
    };
    writeln!(out, "{}", fmt_sig12(d))?;
    Ok(())
}

fn or_na(x: Option<f64>) -> String {
    match x {
        Some(v) if v.is_finite() => fmt_sig12(v),
        _ => "n/a".into(),
    }
}

/// Returns `true` when the report is degenerate (printed as `n/a`).
pub fn bounds(ensemble: &BernoulliEnsemble, csv: bool, out: &mut dyn Write) -> Result<bool> {
    let report = bound_report(ensemble);
    let exact = exact_pmf(ensemble);
    let measured = approximate(ensemble, Method::ShiftedBinomial)
        .ok()
        .map(|a| (tv_distance(&exact, &a.dist), loc_distance(&exact, &a.dist)));

    let rows: [(&str, Option<f64>); 14] = [
        ("K", Some(report.k)),
        ("A1", Some(report.a1)),
        ("A2", Some(report.a2)),
        ("A3", Some(report.a3)),
        ("A4", Some(report.a4)),
        ("eta", Some(report.eta)),
        ("tv_bound", Some(report.tv_bound)),
        ("loc_bound", Some(report.loc_bound)),
        ("tv_corollary", Some(report.tv_corollary)),
        ("loc_corollary", Some(report.loc_corollary)),
        ("binomial1_bound", ehm_bound(ensemble).ok()),
        (
            "binomial2_bound",
            two_param_bound(&ensemble.moments(), &exact).ok(),
        ),
        ("tv_exact", measured.map(|m| m.0)),
        ("loc_exact", measured.map(|m| m.1)),
    ];
    if csv {
        let header: Vec<&str> = rows.iter().map(|(name, _)| *name).collect();
        let values: Vec<String> = rows.iter().map(|(_, v)| or_na(*v)).collect();
        writeln!(out, "{}", header.join(","))?;
        writeln!(out, "{}", values.join(","))?;
    } else {
        for (name, value) in rows {
            writeln!(out, "{name:<16}{}", or_na(value))?;
        }
        for note in &report.notes {
            writeln!(out, "# {note}")?;
        }
    }
    Ok(report.is_degenerate())
}

pub fn sweep(m: Option<usize>, grid: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let grid: Grid = grid
        .parse()
        .map_err(|e| CliError::Usage(format!("--grid: {e}")))?;
    let m = m.unwrap_or(DEFAULT_M);
    if m < 2 {
        return Err(CliError::Usage("the sweep needs --m of at least 2".into()));
    }
    let rows = run_sweep(m, &grid)
        .context("sweep failed")
        .map_err(CliError::Compute)?;
    write_sweep_csv(&rows, out)
        .context("cannot write sweep output")
        .map_err(CliError::Compute)
}
