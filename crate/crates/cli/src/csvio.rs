//! Solution-set CSV files: a header of objective names, optionally led by
//! an `id` column, then one solution per row in natural units.

use std::io::{Read, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use paretoq::{ObjectiveMeta, Solution, SolutionSet};

#[derive(Debug)]
pub struct Loaded {
    pub set: SolutionSet<f64>,
    pub warnings: Vec<String>,
}

pub fn load_solution_set(path: &Path, name: &str, meta: &[ObjectiveMeta<f64>]) -> Result<Loaded> {
    let file = std::fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_solution_set(file, name, meta).with_context(|| format!("in {}", path.display()))
}

pub fn read_solution_set<R: Read>(input: R, name: &str, meta: &[ObjectiveMeta<f64>]) -> Result<Loaded> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.context("line 1: unreadable header")?,
        None => bail!("line 1: missing header"),
    };
    let header: Vec<&str> = header.iter().collect();
    let with_id = header.first().is_some_and(|h| h.eq_ignore_ascii_case("id"));
    let names = &header[usize::from(with_id)..];
    let expected: Vec<&str> = meta.iter().map(|om| om.name.as_str()).collect();
    if names != expected.as_slice() {
        bail!("line 1: header {names:?} does not match objectives {expected:?}");
    }
    let width = header.len();

    let mut solutions = Vec::new();
    for record in records {
        let record = record.context("unreadable row")?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != width {
            bail!("line {line}: expected {width} cells, found {}", record.len());
        }
        let cells: Vec<&str> = record.iter().collect();
        let (id, values) = if with_id { (Some(cells[0]), &cells[1..]) } else { (None, &cells[..]) };
        let objectives = values
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.parse::<f64>()
                    .map_err(|_| anyhow!("line {line}: non-numeric value '{c}' for '{}'", expected[j]))
            })
            .collect::<Result<Vec<f64>>>()?;
        let mut s = Solution::new(objectives).map_err(|e| anyhow!("line {line}: {e}"))?;
        if let Some(id) = id {
            s = s.with_id(id);
        }
        solutions.push(s);
    }
    let mut warnings = Vec::new();
    if solutions.is_empty() {
        warnings.push(format!("solution set '{name}' has no rows"));
    }
    Ok(Loaded {
        set: SolutionSet::new(name, meta.to_vec(), solutions)?,
        warnings,
    })
}

/// Writes `set` as stored, with an `id` column when any member has one.
/// `{:?}` prints the shortest decimal that parses back to the same `f64`.
pub fn write_solution_set<W: Write>(out: W, set: &SolutionSet<f64>) -> Result<()> {
    let with_id = set.solutions().iter().any(|s| s.id.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = Vec::new();
    if with_id {
        header.push("id");
    }
    header.extend(set.meta().iter().map(|om| om.name.as_str()));
    w.write_record(&header)?;
    for (k, s) in set.solutions().iter().enumerate() {
        let mut row = Vec::with_capacity(header.len());
        if with_id {
            row.push(s.id.clone().unwrap_or_else(|| (k + 1).to_string()));
        }
        row.extend(s.objectives().iter().map(|v| format!("{v:?}")));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
