//! Choosing the threshold constant c of the k-tuple bound
//! (c/(δ+1) + e^{−0.5k(c+1/c−2)})·k, and comparing it with the
//! Rautenbach–Volkmann bound over a range of k.
//!
//! Setting the derivative in c to zero and replacing ln(1 − 1/c²) by −1/c²
//! gives the cubic k·c³ − 2(k + ln(0.5k(δ+1)))·c² + k·c + 2 = 0. The largest
//! feasible root is the tuned constant; a grid search over the admissible
//! interval is always run next to it as the reference minimum.

use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_parametric_alt, bound_rv, bound_threshold_ktuple, exponential_shape};
use crate::error::Result;

/// Grid spacing of the reference minimisation.
pub const GRID_STEP: f64 = 1e-3;

/// Gap above the grid minimum at which the cubic choice is flagged.
pub const GRID_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicSpec {
    pub k: u32,
    pub delta: usize,
    /// [c³, c², c, 1] coefficients.
    pub coefficients: [f64; 4],
    /// Coefficients divided by k.
    pub normalized: [f64; 4],
    /// Real roots, ascending.
    pub roots: Vec<f64>,
}

impl CubicSpec {
    pub fn eval(&self, c: f64) -> f64 {
        let [a, b, d, e] = self.coefficients;
        ((a * c + b) * c + d) * c + e
    }
}

pub fn solve_cubic(k: u32, delta: usize) -> CubicSpec {
    let kf = k as f64;
    let middle = -2.0 * (kf + (0.5 * kf * (delta as f64 + 1.0)).ln());
    let coefficients = [kf, middle, kf, 2.0];
    let normalized = coefficients.map(|x| x / kf);
    let mut spec = CubicSpec { k, delta, coefficients, normalized, roots: Vec::new() };
    let [_, a, b, c] = normalized;
    spec.roots = monic_cubic_roots(a, b, c).into_iter().map(|x| polish(&spec, x)).collect();
    spec.roots.sort_by(f64::total_cmp);
    spec
}

/// Real roots of x³ + a·x² + b·x + c via the depressed cubic.
fn monic_cubic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    if disc < 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let phi = (3.0 * q / (p * m)).clamp(-1.0, 1.0).acos() / 3.0;
        (0..3).map(|i| m * (phi - 2.0 * PI * i as f64 / 3.0).cos() - shift).collect()
    } else {
        let root = disc.sqrt();
        vec![(-q / 2.0 + root).cbrt() + (-q / 2.0 - root).cbrt() - shift]
    }
}

/// A few Newton steps; stops when the step no longer improves the residual.
fn polish(spec: &CubicSpec, mut x: f64) -> f64 {
    let [a, b, c, _] = spec.coefficients;
    for _ in 0..8 {
        let fx = spec.eval(x);
        let dfx = (3.0 * a * x + 2.0 * b) * x + c;
        if fx == 0.0 || dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if spec.eval(next).abs() >= fx.abs() {
            break;
        }
        x = next;
    }
    x
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TuneSource {
    Cubic,
    Grid,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tuning {
    pub k: u32,
    pub delta: usize,
    pub c: f64,
    /// Coefficient of n at `c`.
    pub value: f64,
    pub source: TuneSource,
    pub roots: Vec<f64>,
    pub grid_c: f64,
    pub grid_value: f64,
    /// value − grid_value.
    pub grid_gap: f64,
    /// The gap exceeds [`GRID_TOLERANCE`].
    pub discrepancy: bool,
    /// A smaller feasible root whose coefficient beats the largest root.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub better_root: Option<f64>,
}

/// Tuned c for given k and δ, or `None` when no c > 1 satisfies δ ≥ ck − 1.
pub fn tune_c(k: u32, delta: usize) -> Option<Tuning> {
    if k == 0 {
        return None;
    }
    let upper = (delta as f64 + 1.0) / k as f64;
    if upper <= 1.0 {
        return None;
    }
    let kf = k as f64;
    let value = |c: f64| exponential_shape(kf, delta, c);
    let feasible = |c: f64| c > 1.0 && delta as f64 >= c * kf - 1.0;

    let steps = ((upper - 1.0) / GRID_STEP).floor() as u64;
    let (grid_c, grid_value) = (1..=steps)
        .map(|i| 1.0 + i as f64 * GRID_STEP)
        .chain(std::iter::once(upper))
        .filter(|&c| feasible(c))
        .map(|c| (c, value(c)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("the upper end of the interval is feasible");

    let cubic = solve_cubic(k, delta);
    let feasible_roots: Vec<f64> = cubic.roots.iter().copied().filter(|&c| feasible(c)).collect();
    let (c, source) = match feasible_roots.last() {
        Some(&c) => (c, TuneSource::Cubic),
        None => (grid_c, TuneSource::Grid),
    };
    let better_root =
        feasible_roots.iter().copied().filter(|&r| value(r) < value(c)).min_by(|a, b| value(*a).total_cmp(&value(*b)));
    let grid_gap = value(c) - grid_value;
    Some(Tuning {
        k,
        delta,
        c,
        value: value(c),
        source,
        roots: cubic.roots,
        grid_c,
        grid_value,
        grid_gap,
        discrepancy: grid_gap > GRID_TOLERANCE,
        better_root,
    })
}

/// One k of the comparison table. Coefficients of n.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub k: u32,
    /// Rautenbach–Volkmann value, evaluated even outside its range.
    pub rv: f64,
    pub rv_applicable: bool,
    /// Threshold bound at c = 3, when δ ≥ 3k − 1.
    pub c3: Option<f64>,
    pub tuned_c: Option<f64>,
    pub tuned_value: Option<f64>,
    /// Strong form of the (k,k) bound, which needs δ ≥ k.
    pub ktuple_corollary: Option<f64>,
    pub best: Option<f64>,
    pub best_name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub delta: usize,
    pub n: usize,
    /// ⌊(δ+1)/(2 ln(δ+1))⌋, the largest k covered by the RV bound.
    pub rv_cutoff: u32,
    /// ⌊(δ+1)/3⌋, the largest k covered by the c = 3 bound.
    pub c3_cutoff: u32,
    /// 1.5 ln(δ+1) − 1.5 ln(ln(δ+1) − 3); defined when ln(δ+1) > 3.
    pub crossover: Option<f64>,
    /// Smallest tabulated k with c3 < rv.
    pub first_c3_better: Option<u32>,
    /// Maximal runs of k where both bounds apply and c3 < rv.
    pub c3_better_ranges: Vec<(u32, u32)>,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn row(&self, k: u32) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    /// Columns k, rv, c3, tuned_c, tuned_value, best; empty cells where a bound does not apply.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        let cell = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        writer.write_record(["k", "rv", "c3", "tuned_c", "tuned_value", "best"]).map_err(csv_error)?;
        for row in &self.rows {
            writer
                .write_record([
                    row.k.to_string(),
                    row.rv.to_string(),
                    cell(row.c3),
                    cell(row.tuned_c),
                    cell(row.tuned_value),
                    cell(row.best),
                ])
                .map_err(csv_error)?;
        }
        writer.flush()?;
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> crate::Error {
    std::io::Error::other(e).into()
}

/// Tabulates the bounds for k = 1..max(⌊(δ+1)/3⌋, k).
pub fn compare_bounds(k: u32, delta: usize, n: usize) -> ComparisonReport {
    let d1 = delta as f64 + 1.0;
    let c3_cutoff = (d1 / 3.0).floor() as u32;
    let rv_cutoff = (d1 / (2.0 * d1.ln())).floor() as u32;
    let top = c3_cutoff.max(k).max(1);

    let rows: Vec<ComparisonRow> = (1..=top).into_par_iter().map(|q| row(q, delta)).collect();

    let first_c3_better = rows.iter().find(|r| r.c3.is_some_and(|c3| c3 < r.rv)).map(|r| r.k);
    let mut c3_better_ranges: Vec<(u32, u32)> = Vec::new();
    for r in rows.iter().filter(|r| r.rv_applicable && r.c3.is_some_and(|c3| c3 < r.rv)) {
        match c3_better_ranges.last_mut() {
            Some(last) if last.1 + 1 == r.k => last.1 = r.k,
            _ => c3_better_ranges.push((r.k, r.k)),
        }
    }
    let crossover = (d1.ln() > 3.0).then(|| 1.5 * d1.ln() - 1.5 * (d1.ln() - 3.0).ln());
    ComparisonReport { delta, n, rv_cutoff, c3_cutoff, crossover, first_c3_better, c3_better_ranges, rows }
}

fn row(k: u32, delta: usize) -> ComparisonRow {
    let rv = bound_rv(k, delta, 1);
    let c3 = bound_threshold_ktuple(k, delta, 1, 3.0).coefficient;
    let tuning = tune_c(k, delta);
    let corollary = bound_parametric_alt(k, k, delta, 1).strong.coefficient;
    let rv_value = rv.raw_coefficient().expect("finite for k ≥ 1");

    let mut candidates = vec![
        ("threshold_c3", c3),
        ("threshold_tuned", tuning.as_ref().map(|t| t.value)),
        ("parametric_alt_strong", corollary),
    ];
    if rv.applicable {
        candidates.push(("rautenbach_volkmann", Some(rv_value)));
    }
    let best = candidates.into_iter().filter_map(|(name, v)| v.map(|v| (name, v))).min_by(|a, b| a.1.total_cmp(&b.1));
    ComparisonRow {
        k,
        rv: rv_value,
        rv_applicable: rv.applicable,
        c3,
        tuned_c: tuning.as_ref().map(|t| t.c),
        tuned_value: tuning.as_ref().map(|t| t.value),
        ktuple_corollary: corollary,
        best: best.map(|b| b.1),
        best_name: best.map(|b| b.0.to_string()),
    }
}
