//! Experiment manifest. Run paths are relative to the manifest file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use paretoq::doe::RunCollection;
use paretoq::pipeline::EvaluationOptions;
use paretoq::preprocess::PreferenceSpec;
use paretoq::ObjectiveMeta;
use serde::Deserialize;

use crate::csvio::load_solution_set;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmEntry {
    pub name: String,
    pub runs: Vec<PathBuf>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputPaths {
    /// Machine-readable report.
    #[serde(default)]
    pub report: Option<PathBuf>,
    /// Directory for plot data.
    #[serde(default)]
    pub plot_data: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub objectives: Vec<ObjectiveMeta<f64>>,
    pub algorithms: Vec<AlgorithmEntry>,
    #[serde(default)]
    pub preferences: PreferenceSpec<f64>,
    #[serde(default)]
    pub indicator_overrides: EvaluationOptions<f64>,
    #[serde(default)]
    pub output: OutputPaths,
    #[serde(skip)]
    pub base: PathBuf,
}

/// A manifest with every run file parsed.
pub struct Loaded {
    pub manifest: Manifest,
    pub algorithms: Vec<RunCollection<f64>>,
    pub warnings: Vec<String>,
}

impl Manifest {
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut m: Manifest = serde_json::from_str(text).context("invalid manifest")?;
        m.base = base.to_path_buf();
        if m.objectives.is_empty() {
            bail!("manifest declares no objectives");
        }
        if m.algorithms.is_empty() {
            bail!("manifest declares no algorithms");
        }
        for (i, a) in m.algorithms.iter().enumerate() {
            if a.runs.is_empty() {
                bail!("algorithm '{}' lists no run files", a.name);
            }
            if m.algorithms[..i].iter().any(|b| b.name == a.name) {
                bail!("algorithm name '{}' is used twice", a.name);
            }
        }
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base).with_context(|| format!("in {}", path.display()))
    }

    pub fn resolve(&self, p: &Path) -> PathBuf {
        self.base.join(p)
    }

    pub fn load(self) -> Result<Loaded> {
        let mut algorithms = Vec::new();
        let mut warnings = Vec::new();
        for a in &self.algorithms {
            let mut runs = Vec::new();
            for (k, p) in a.runs.iter().enumerate() {
                let name = if a.runs.len() == 1 { a.name.clone() } else { format!("{}#{k}", a.name) };
                let l = load_solution_set(&self.resolve(p), &name, &self.objectives)?;
                warnings.extend(l.warnings);
                runs.push(l.set);
            }
            algorithms.push(RunCollection::new(a.name.clone(), runs)?);
        }
        Ok(Loaded {
            manifest: self,
            algorithms,
            warnings,
        })
    }
}
