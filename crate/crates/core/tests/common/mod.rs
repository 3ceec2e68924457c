//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use paretoq::SolutionSet;
use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;

pub fn set(name: &str, rows: &[&[f64]]) -> SolutionSet<f64> {
    SolutionSet::from_rows(name, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn rows_set(name: &str, rows: Vec<Vec<f64>>) -> SolutionSet<f64> {
    SolutionSet::from_rows(name, rows).unwrap()
}

fn weakly_le(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn strictly_le(a: &[f64], b: &[f64]) -> bool {
    weakly_le(a, b) && a != b
}

/// Pairwise O(n²) nondominated filter that keeps duplicates.
pub fn brute_front(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    points
        .iter()
        .filter(|p| !points.iter().any(|q| strictly_le(q, p)))
        .cloned()
        .collect()
}

/// Counts unit cells `[c, c+1)^m` below the integer reference point whose
/// lower corner is weakly dominated by some point.
pub fn grid_hv(points: &[Vec<i64>], refpoint: &[i64]) -> u64 {
    let m = refpoint.len();
    let lo: Vec<i64> = (0..m)
        .map(|j| points.iter().map(|p| p[j]).min().unwrap_or(refpoint[j]).min(refpoint[j]))
        .collect();
    let mut cell = lo.clone();
    let mut count = 0;
    if lo.iter().zip(refpoint).any(|(l, r)| l >= r) {
        return 0;
    }
    loop {
        if points
            .iter()
            .any(|p| p.iter().zip(&cell).all(|(x, c)| x <= c))
        {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == m {
                return count;
            }
            cell[j] += 1;
            if cell[j] < refpoint[j] {
                break;
            }
            cell[j] = lo[j];
            j += 1;
        }
    }
}

/// Karp-Luby-Madras estimate of the union volume of the boxes
/// `[p, refpoint]`: sample a box in proportion to its volume, a point
/// uniformly inside it, and weight by the inverse coverage count.
pub fn monte_carlo_hv<R: Rng>(points: &[Vec<f64>], refpoint: &[f64], samples: usize, rng: &mut R) -> f64 {
    let boxes: Vec<&Vec<f64>> = points
        .iter()
        .filter(|p| p.iter().zip(refpoint).all(|(x, r)| x < r))
        .collect();
    if boxes.is_empty() {
        return 0.0;
    }
    let volumes: Vec<f64> = boxes
        .iter()
        .map(|p| p.iter().zip(refpoint).map(|(x, r)| r - x).product())
        .collect();
    let total: f64 = volumes.iter().sum();
    let pick = WeightedIndex::new(&volumes).unwrap();
    let mut x = vec![0.0; refpoint.len()];
    let mut acc = 0.0;
    for _ in 0..samples {
        let b = boxes[pick.sample(rng)];
        for (j, xj) in x.iter_mut().enumerate() {
            *xj = rng.gen_range(b[j]..refpoint[j]);
        }
        let covered = boxes.iter().filter(|p| weakly_le(p, &x)).count();
        acc += 1.0 / covered as f64;
    }
    total * acc / samples as f64
}

/// Random integer instance: m in {2,3,4}, 1..=10 points with coordinates
/// in 0..=9, reference point 10 everywhere.
pub fn integer_instance<R: Rng>(rng: &mut R) -> (Vec<Vec<i64>>, Vec<i64>) {
    let m = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=10);
    let points = (0..n)
        .map(|_| (0..m).map(|_| rng.gen_range(0..=9)).collect())
        .collect();
    (points, vec![10; m])
}

pub fn to_f64(points: &[Vec<i64>]) -> Vec<Vec<f64>> {
    points
        .iter()
        .map(|p| p.iter().map(|&v| v as f64).collect())
        .collect()
}

/// Uniform point on the simplex `sum = 1`.
fn simplex_point<R: Rng>(m: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..m).map(|_| -rng.gen::<f64>().max(1e-12).ln()).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|v| v / s).collect()
}

/// A nondominated set `a`, a one-to-one nonnegative perturbation `b` of it
/// (so `a` weakly dominates `b`), and a sparse reference front `r` on the
/// simplex that neither set dominates.
pub struct CompliancePair {
    pub a: SolutionSet<f64>,
    pub b: SolutionSet<f64>,
    pub r: SolutionSet<f64>,
}

pub fn compliance_pair<R: Rng>(rng: &mut R) -> CompliancePair {
    let m = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=20);
    let raw: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            simplex_point(m, rng)
                .into_iter()
                .map(|v| v + rng.gen_range(0.0..0.3))
                .collect()
        })
        .collect();
    let mut a_rows = brute_front(&raw);
    a_rows.dedup();
    let b_rows: Vec<Vec<f64>> = a_rows
        .iter()
        .map(|p| {
            p.iter()
                .map(|&v| if rng.gen_bool(0.5) { v + rng.gen_range(0.0..0.3) } else { v })
                .collect()
        })
        .collect();
    let k = rng.gen_range(2..=8);
    let r_rows: Vec<Vec<f64>> = (0..k).map(|_| simplex_point(m, rng)).collect();
    CompliancePair {
        a: rows_set("A", a_rows),
        b: rows_set("B", b_rows),
        r: rows_set("R", r_rows),
    }
}

/// Componentwise maximum over both sets plus a margin.
pub fn enclosing_point(a: &SolutionSet<f64>, b: &SolutionSet<f64>, margin: f64) -> Vec<f64> {
    (0..a.m())
        .map(|j| {
            a.iter()
                .chain(b.iter())
                .map(|p| p[j])
                .fold(f64::NEG_INFINITY, f64::max)
                + margin
        })
        .collect()
}

/// `x` is strictly better than `y` beyond rounding noise.
pub fn strictly_lower(x: f64, y: f64) -> bool {
    x < y - 1e-9 * (1.0 + x.abs().max(y.abs()))
}

/// Compliant indicators that rank the dominated set `b` strictly better.
pub fn compliance_violations(p: &CompliancePair) -> Vec<&'static str> {
    use paretoq::indicators::*;
    let (a, b, r) = (&p.a, &p.b, &p.r);
    let refpoint = enclosing_point(a, b, 0.1);
    let peers = [a.clone(), b.clone()];
    let mut out = Vec::new();
    if strictly_lower(hypervolume(a, &refpoint).unwrap(), hypervolume(b, &refpoint).unwrap()) {
        out.push("HV");
    }
    if strictly_lower(epsilon_additive(b, r).unwrap(), epsilon_additive(a, r).unwrap()) {
        out.push("EPS");
    }
    if strictly_lower(epsilon_additive(b, a).unwrap(), epsilon_additive(a, b).unwrap()) {
        out.push("EPS(pair)");
    }
    if strictly_lower(gd_plus(b, r).unwrap(), gd_plus(a, r).unwrap()) {
        out.push("GD+");
    }
    if strictly_lower(igd_plus(b, r).unwrap(), igd_plus(a, r).unwrap()) {
        out.push("IGD+");
    }
    if strictly_lower(unfr(a, &peers).unwrap(), unfr(b, &peers).unwrap()) {
        out.push("UNFR");
    }
    if strictly_lower(contribution(a, b).unwrap(), contribution(b, a).unwrap()) {
        out.push("CI");
    }
    out
}

/// GD or IGD ranking the dominated set strictly better, if either does.
pub fn gd_igd_violation(p: &CompliancePair) -> Option<&'static str> {
    use paretoq::indicators::*;
    if strictly_lower(gd(&p.b, &p.r, 1.0).unwrap(), gd(&p.a, &p.r, 1.0).unwrap()) {
        Some("GD")
    } else if strictly_lower(igd(&p.b, &p.r).unwrap(), igd(&p.a, &p.r).unwrap()) {
        Some("IGD")
    } else {
        None
    }
}

pub fn pair_json(p: &CompliancePair, indicator: &str) -> String {
    serde_json::json!({
        "indicator": indicator,
        "a": p.a.points(),
        "b": p.b.points(),
        "reference": p.r.points(),
    })
    .to_string()
}
