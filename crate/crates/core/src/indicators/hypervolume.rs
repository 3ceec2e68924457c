//! Exact hypervolume by recursive slicing along the last objective, with a
//! sweep in two dimensions. Worst-case cost grows exponentially with the
//! number of objectives, hence the cap.

use crate::dominance::dominates_vec;
use crate::error::{Error, Result};
use crate::scalar::{cmp, Scalar};
use crate::solution::SolutionSet;

/// Largest objective count accepted by [`hypervolume`].
pub const MAX_HV_OBJECTIVES: usize = 10;

/// Lebesgue measure of the union of the boxes `[a, refpoint]` over `a`.
///
/// Members not strictly better than `refpoint` on every objective
/// contribute nothing. Duplicates and dominated members do not change the
/// value.
pub fn hypervolume<T: Scalar>(a: &SolutionSet<T>, refpoint: &[T]) -> Result<T> {
    if refpoint.len() != a.m() {
        return Err(Error::DimensionMismatch {
            expected: a.m(),
            found: refpoint.len(),
        });
    }
    if a.m() > MAX_HV_OBJECTIVES {
        return Err(Error::TooManyObjectives {
            m: a.m(),
            max: MAX_HV_OBJECTIVES,
        });
    }
    if let Some(index) = refpoint.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            index,
            value: refpoint[index].as_f64(),
        });
    }
    let inside: Vec<Vec<T>> = a
        .iter()
        .filter(|p| p.iter().zip(refpoint).all(|(x, r)| x < r))
        .map(<[T]>::to_vec)
        .collect();
    Ok(volume(inside, refpoint))
}

/// Drops duplicates and dominated points.
fn prune<T: Scalar>(pts: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        let beaten = pts.iter().any(|q| dominates_vec(q, p)) || pts[..i].contains(p);
        if !beaten {
            out.push(p.clone());
        }
    }
    out
}

fn volume<T: Scalar>(pts: Vec<Vec<T>>, r: &[T]) -> T {
    if pts.is_empty() {
        return T::zero();
    }
    let m = r.len();
    if m == 1 {
        let best = pts.iter().map(|p| p[0]).fold(T::infinity(), T::min);
        return r[0] - best;
    }
    let mut pts = prune(pts);
    if m == 2 {
        pts.sort_by(|p, q| cmp(&p[0], &q[0]));
        let mut ceiling = r[1];
        let mut area = T::zero();
        for p in &pts {
            if p[1] < ceiling {
                area = area + (r[0] - p[0]) * (ceiling - p[1]);
                ceiling = p[1];
            }
        }
        return area;
    }
    let last = m - 1;
    pts.sort_by(|p, q| cmp(&p[last], &q[last]));
    let mut total = T::zero();
    for i in 0..pts.len() {
        let top = pts.get(i + 1).map_or(r[last], |q| q[last]);
        let height = top - pts[i][last];
        if height > T::zero() {
            let slice: Vec<Vec<T>> = pts[..=i].iter().map(|p| p[..last].to_vec()).collect();
            total = total + volume(slice, &r[..last]) * height;
        }
    }
    total
}
