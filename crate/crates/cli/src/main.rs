//! `paretoq`: evaluate, compare and lint Pareto solution-set comparisons
//! described by a JSON manifest of CSV run files.
//!
//! Exit status: 0 clean, 1 warning-level lints, 2 error-level lints or a
//! runtime failure. `--strict` turns warnings into status 2.

mod csvio;
mod manifest;
mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use paretoq::doe::{doe_compare, per_objective_stats, DoeStat, Winner};
use paretoq::guidance::{max_severity, LintWarning, PlotKind, Severity};
use paretoq::indicators::{IndicatorName, NormalizationMode};
use paretoq::pipeline::{evaluate, lint_setup, prepare_runs, EvaluationOptions};
use paretoq::preprocess::{restore_orientation, NormalizationBounds, ReferencePointStrategy};
use paretoq::SolutionSet;

use crate::manifest::{Loaded, Manifest};

#[derive(Parser)]
#[command(name = "paretoq", version, about = "Evaluate and lint Pareto solution-set comparisons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Experiment manifest (JSON).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Indicator to compute; repeat for several. Replaces the recommended list.
    #[arg(long = "indicator", global = true)]
    indicators: Vec<String>,
    /// Explicit HV reference point in natural units, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    ref_point: Option<Vec<f64>>,
    /// worst-values, nadir-plus-tenth, nadir-plus-l-over-h or doubled-range.
    #[arg(long, global = true)]
    ref_strategy: Option<String>,
    /// Exponent of the GD power mean, at least 1.
    #[arg(long, global = true)]
    gd_p: Option<f64>,
    /// Divisions per objective for grid diversity.
    #[arg(long, global = true)]
    grid_div: Option<usize>,
    /// Compute indicators on raw values.
    #[arg(long, global = true)]
    no_normalize: bool,
    /// Output directory for reports and plot data.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Treat warning-level lints as errors.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the recommended (or requested) evaluation over every run.
    Evaluate,
    /// Report a binary indicator in both orderings.
    Compare {
        /// First algorithm; defaults to the first in the manifest.
        first: Option<String>,
        /// Second algorithm; defaults to the next one.
        second: Option<String>,
    },
    /// Print the recommended evaluation plan.
    Recommend,
    /// Lint the evaluation setup.
    Lint {
        /// Print the lint code table and exit.
        #[arg(long)]
        codes: bool,
    },
    /// Per-objective descriptive statistics of every run.
    Stats,
    /// Write scatter or parallel-coordinates data of representative runs.
    PlotData,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn status(lints: &[LintWarning], strict: bool) -> u8 {
    match max_severity(lints) {
        Some(Severity::Error) => 2,
        Some(Severity::Warning) if strict => 2,
        Some(Severity::Warning) => 1,
        _ => 0,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    if let Command::Lint { codes: true } = cli.command {
        print!("{}", report::code_table());
        return Ok(0);
    }
    let c = &cli.common;
    let path = c.manifest.as_deref().context("--manifest is required")?;
    let loaded = Manifest::read(path)?.load()?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    let options = options(c, &loaded.manifest)?;
    match &cli.command {
        Command::Evaluate => cmd_evaluate(&loaded, &options, c),
        Command::Compare { first, second } => {
            cmd_compare(&loaded, &options, first.as_deref(), second.as_deref())
        }
        Command::Recommend => cmd_recommend(&loaded, c.strict),
        Command::Lint { .. } => cmd_lint(&loaded, &options, c.strict),
        Command::Stats => cmd_stats(&loaded),
        Command::PlotData => cmd_plot_data(&loaded, &options, c),
    }
}

fn parse_strategy(name: &str) -> Result<ReferencePointStrategy<f64>> {
    let key = name.trim().to_ascii_lowercase().replace('-', "_");
    serde_json::from_value(serde_json::Value::String(key))
        .with_context(|| format!("unknown reference point strategy '{name}'"))
}

/// Manifest overrides, then command-line flags on top.
fn options(c: &Common, m: &Manifest) -> Result<EvaluationOptions<f64>> {
    let mut o = m.indicator_overrides.clone();
    if !c.indicators.is_empty() {
        o.indicators = Some(
            c.indicators
                .iter()
                .map(|s| s.parse::<IndicatorName>())
                .collect::<paretoq::Result<_>>()?,
        );
    }
    if let Some(s) = &c.ref_strategy {
        o.hv_strategy = Some(parse_strategy(s)?);
    }
    if let Some(p) = &c.ref_point {
        if c.ref_strategy.is_some() {
            bail!("--ref-point and --ref-strategy are mutually exclusive");
        }
        o.hv_strategy = Some(ReferencePointStrategy::Explicit(p.clone()));
    }
    if let Some(p) = c.gd_p {
        o.gd_p = Some(p);
    }
    if let Some(g) = c.grid_div {
        o.grid_divisions = Some(g);
    }
    if c.no_normalize {
        o.normalization = Some(NormalizationMode::NoNormalization);
    }
    Ok(o)
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_evaluate(l: &Loaded, options: &EvaluationOptions<f64>, c: &Common) -> Result<u8> {
    let r = evaluate(&l.algorithms, &l.manifest.preferences, options)?;
    let text = report::evaluation(&r);
    print!("{text}");
    let mut json = serde_json::to_string_pretty(&r)?;
    json.push('\n');
    if let Some(dir) = &c.out {
        write_file(&dir.join("report.json"), json.as_bytes())?;
        write_file(&dir.join("report.txt"), text.as_bytes())?;
    } else if let Some(p) = &l.manifest.output.report {
        write_file(&l.manifest.resolve(p), json.as_bytes())?;
    }
    Ok(status(&r.lints, c.strict))
}

fn cmd_compare(
    l: &Loaded,
    options: &EvaluationOptions<f64>,
    first: Option<&str>,
    second: Option<&str>,
) -> Result<u8> {
    let names = options
        .indicators
        .clone()
        .context("compare needs at least one --indicator (CI, C or EPS)")?;
    if let Some(n) = names.iter().find(|n| !n.is_binary()) {
        bail!("{n} is not a binary indicator; compare supports CI, C and EPS");
    }
    let algs = &l.algorithms;
    let pick = |name: Option<&str>, default: usize| -> Result<usize> {
        match name {
            Some(n) => algs
                .iter()
                .position(|a| a.algorithm() == n)
                .with_context(|| format!("no algorithm named '{n}'")),
            None if default < algs.len() => Ok(default),
            None => bail!("compare needs two algorithms"),
        }
    };
    let i = pick(first, 0)?;
    let j = pick(second, if i == 0 { 1 } else { 0 })?;
    if i == j {
        bail!("compare needs two different algorithms");
    }
    let pair = vec![algs[i].clone(), algs[j].clone()];
    let r = evaluate(&pair, &l.manifest.preferences, options)?;
    let mut out = String::new();
    report::pairwise(&mut out, &r.pairwise);
    print!("{out}");
    for w in &r.warnings {
        eprintln!("warning: {w}");
    }
    Ok(0)
}

fn cmd_recommend(l: &Loaded, strict: bool) -> Result<u8> {
    let (plan, _) = lint_setup(&l.algorithms, &l.manifest.preferences, &EvaluationOptions::default())?;
    let mut out = String::new();
    report::plan(&mut out, &plan, &l.manifest.objectives);
    report::lints(&mut out, &plan.warnings);
    print!("{out}");
    Ok(status(&plan.warnings, strict))
}

fn cmd_lint(l: &Loaded, options: &EvaluationOptions<f64>, strict: bool) -> Result<u8> {
    let (_, lints) = lint_setup(&l.algorithms, &l.manifest.preferences, options)?;
    let mut out = String::new();
    report::lints(&mut out, &lints);
    print!("{out}");
    Ok(status(&lints, strict))
}

fn cmd_stats(l: &Loaded) -> Result<u8> {
    let prepared = prepare_runs(&l.algorithms, &l.manifest.preferences)?;
    let mut out = String::new();
    for a in &prepared.algorithms {
        for (k, run) in a.runs().iter().enumerate() {
            let _ = writeln!(out, "{} run {k} ({} solutions)", a.algorithm(), run.len());
            match per_objective_stats(run) {
                Ok(s) => {
                    for (j, name) in s.names.iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "  {name}: mean {} median {} best {} worst {}",
                            s.mean[j], s.median[j], s.best[j], s.worst[j]
                        );
                    }
                }
                Err(_) => out.push_str("  empty\n"),
            }
        }
    }
    // Descriptive statistics can favour a dominated set; flag when they do.
    let algs = &prepared.algorithms;
    for (i, a) in algs.iter().enumerate() {
        for b in &algs[i + 1..] {
            for (k, (ra, rb)) in a.runs().iter().zip(b.runs()).enumerate() {
                for stat in [DoeStat::Mean, DoeStat::Median] {
                    let Ok(cmp) = doe_compare(ra, rb, stat) else { continue };
                    let verdicts: Vec<String> = ra
                        .meta()
                        .iter()
                        .zip(&cmp.winners)
                        .map(|(om, w)| {
                            let who = match w {
                                Winner::First => a.algorithm(),
                                Winner::Second => b.algorithm(),
                                Winner::Tie => "tie",
                            };
                            format!("{} {who}", om.name)
                        })
                        .collect();
                    let _ = write!(
                        out,
                        "{} {} vs {} run {k}: {}",
                        if stat == DoeStat::Mean { "mean" } else { "median" },
                        a.algorithm(),
                        b.algorithm(),
                        verdicts.join(", ")
                    );
                    if cmp.misleading {
                        out.push_str(" (misleading: contradicts set dominance)");
                    }
                    out.push('\n');
                }
            }
        }
    }
    for w in &prepared.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    print!("{out}");
    Ok(0)
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

fn cmd_plot_data(l: &Loaded, options: &EvaluationOptions<f64>, c: &Common) -> Result<u8> {
    let dir = match (&c.out, &l.manifest.output.plot_data) {
        (Some(d), _) => d.clone(),
        (None, Some(p)) => l.manifest.resolve(p),
        (None, None) => bail!("plot-data needs --out or output.plot_data in the manifest"),
    };
    let r = evaluate(&l.algorithms, &l.manifest.preferences, options)?;
    let prepared = prepare_runs(&l.algorithms, &l.manifest.preferences)?;
    let mut warnings = Vec::new();
    let reps: Vec<(String, Option<SolutionSet<f64>>)> = prepared
        .algorithms
        .iter()
        .map(|a| {
            let set = r
                .representatives
                .iter()
                .find(|rep| rep.algorithm == a.algorithm())
                .map(|rep| a.runs()[rep.run].clone())
                .filter(|s| !s.is_empty());
            if set.is_none() {
                warnings.push(format!("'{}' has no evaluable run; its plot data is empty", a.algorithm()));
            }
            (a.algorithm().to_owned(), set)
        })
        .collect();
    let meta = prepared.algorithms[0].meta().to_vec();
    let mut written = Vec::new();
    match r.plan.plotting {
        PlotKind::Scatter => {
            for (name, set) in &reps {
                let set = match set {
                    Some(s) => restore_orientation(s),
                    None => SolutionSet::empty(name.clone(), meta.clone())
                        .map(|s| restore_orientation(&s))?,
                };
                let mut buf = Vec::new();
                csvio::write_solution_set(&mut buf, &set)?;
                let path = dir.join(format!("{}.csv", file_stem(name)));
                write_file(&path, &buf)?;
                written.push(path);
            }
        }
        PlotKind::ParallelCoordinates => {
            let present: Vec<SolutionSet<f64>> = reps.iter().filter_map(|(_, s)| s.clone()).collect();
            let bounds = NormalizationBounds::combined_front(&present).ok();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["set", "id", "objective", "value"])?;
            for (name, set) in &reps {
                let (Some(set), Some(b)) = (set, &bounds) else { continue };
                for (k, s) in set.solutions().iter().enumerate() {
                    let id = s.id.clone().unwrap_or_else(|| (k + 1).to_string());
                    for (om, v) in set.meta().iter().zip(b.apply(s.objectives())) {
                        w.write_record([name.as_str(), &id, &om.name, &format!("{v:?}")])?;
                    }
                }
            }
            let path = dir.join("parallel_coordinates.csv");
            write_file(&path, &w.into_inner()?)?;
            written.push(path);
        }
    }
    for p in &written {
        println!("wrote {}", p.display());
    }
    for w in r.warnings.iter().chain(&warnings) {
        eprintln!("warning: {w}");
    }
    Ok(0)
}
