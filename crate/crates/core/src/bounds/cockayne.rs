//! Bounds for ⟨r,s⟩-domination and its total variant.

use serde::Serialize;

use super::binomial::{binomial_exact, log_binomial};
use super::{rs_log_coefficient, rs_strong_coefficient, BoundForms, BoundReport, ReportBuilder, Verdict};

/// The three numbers of an (r, s) pair that the bounds depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RsProfile {
    /// τ = min r_i.
    pub tau: u32,
    /// s = max s_i.
    pub s: u32,
    /// Σ r_i, the trivial upper bound on any r-function's weight.
    pub capacity: u64,
}

impl RsProfile {
    /// `None` when the vectors are empty or of different lengths.
    pub fn from_vectors(r: &[u32], s: &[u32]) -> Option<Self> {
        if r.is_empty() || r.len() != s.len() {
            return None;
        }
        Some(Self { tau: *r.iter().min()?, s: *s.iter().max()?, capacity: r.iter().map(|&x| x as u64).sum() })
    }

    /// Profile of constant vectors r_i = r, s_i = s on n vertices.
    pub fn uniform(r: u32, s: u32, n: usize) -> Self {
        Self { tau: r, s, capacity: r as u64 * n as u64 }
    }
}

/// Derived parameters of the closed-neighbourhood bound for a chosen r.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RsParams {
    pub tau: u32,
    pub s: u32,
    pub r: u64,
    /// θ = (δ+1)r − s.
    pub theta: u64,
    /// ρ = 1/θ (infinite when θ = 0).
    pub rho: f64,
    /// ln B_{s−1} with B_t = C((δ+1)r, t).
    pub ln_b: f64,
    /// B_{s−1} as an integer when (δ+1)r ≤ 64.
    pub b_exact: Option<u128>,
}

impl RsParams {
    /// Parameters with the default r = ⌊s/(δ+1)⌋ + 1.
    pub fn new(profile: RsProfile, delta: usize) -> Self {
        let r = profile.s as u64 / (delta as u64 + 1) + 1;
        Self::with_r(profile, delta, r)
    }

    /// Parameters for an explicit r, which must satisfy (δ+1)r ≥ s.
    pub fn with_r(profile: RsProfile, delta: usize, r: u64) -> Self {
        let top = (delta as u64 + 1) * r;
        debug_assert!(top >= profile.s as u64);
        let theta = top - profile.s as u64;
        let t = profile.s as i64 - 1;
        Self {
            tau: profile.tau,
            s: profile.s,
            r,
            theta,
            rho: 1.0 / theta as f64,
            ln_b: log_binomial(top, t),
            b_exact: if t >= 0 { binomial_exact(top, t as u64) } else { Some(0) },
        }
    }

    fn snapshot(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("tau", self.tau as f64),
            ("s", self.s as f64),
            ("r", self.r as f64),
            ("theta", self.theta as f64),
            ("rho", self.rho),
            ("ln_b", self.ln_b),
        ]
    }

    fn verdict(&self) -> Verdict {
        if self.s == 0 {
            return Err("s = 0: the zero function already dominates".into());
        }
        if self.r > self.tau as u64 {
            return Err(format!("needs r ≤ τ, got r={} τ={}", self.r, self.tau));
        }
        Ok(())
    }
}

/// Derived parameters of the open-neighbourhood (total) bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TotalRsParams {
    pub tau: u32,
    pub s: u32,
    /// r̃ = ⌊s/δ⌋ + 1.
    pub r: u64,
    /// θ̃ = δ·r̃ − s.
    pub theta: u64,
    pub rho: f64,
    /// ln B̃_{s−1} = ln C(δ·r̃, s−1).
    pub ln_b: f64,
}

impl TotalRsParams {
    /// `None` when δ = 0.
    pub fn new(profile: RsProfile, delta: usize) -> Option<Self> {
        if delta == 0 {
            return None;
        }
        let delta = delta as u64;
        let r = profile.s as u64 / delta + 1;
        let theta = delta * r - profile.s as u64;
        Some(Self {
            tau: profile.tau,
            s: profile.s,
            r,
            theta,
            rho: 1.0 / theta as f64,
            ln_b: log_binomial(delta * r, profile.s as i64 - 1),
        })
    }
}

fn malformed(name: &'static str, n: usize) -> BoundReport {
    ReportBuilder::new(name, n, None).finish(Err("r and s must be non-empty vectors of equal length".into()), None)
}

fn rs_report(
    name: &'static str,
    r_vec: &[u32],
    s_vec: &[u32],
    delta: usize,
    n: usize,
    coefficient: fn(f64, f64, f64) -> f64,
) -> BoundReport {
    let Some(profile) = RsProfile::from_vectors(r_vec, s_vec) else {
        return malformed(name, n);
    };
    let params = RsParams::new(profile, delta);
    let raw = coefficient(params.r as f64, params.theta as f64, params.ln_b);
    ReportBuilder::new(name, n, Some(profile.capacity as f64))
        .params(&params.snapshot())
        .param("delta", delta as f64)
        .finish(params.verdict(), Some(raw))
}

/// γ⟨r,s⟩(G) ≤ (1 − (rρ)^ρ/((1+ρ)^{1+ρ} B_{s−1}^ρ))·r·n, valid when r ≤ τ.
pub fn bound_rs(r_vec: &[u32], s_vec: &[u32], delta: usize, n: usize) -> BoundReport {
    rs_report("rs_strong", r_vec, s_vec, delta, n, rs_strong_coefficient)
}

/// γ⟨r,s⟩(G) ≤ (ln(θ+1) + ln B_{s−1} − ln r + 1)/(θ+1)·r·n, valid when r ≤ τ.
pub fn bound_rs_log(r_vec: &[u32], s_vec: &[u32], delta: usize, n: usize) -> BoundReport {
    rs_report("rs_log", r_vec, s_vec, delta, n, rs_log_coefficient)
}

/// The logarithmic bound minimised over every integer r with s/(δ+1) ≤ r ≤ τ.
/// The minimiser is reported as the `argmin_r` parameter.
pub fn bound_rs_log_optimized(r_vec: &[u32], s_vec: &[u32], delta: usize, n: usize) -> BoundReport {
    const NAME: &str = "rs_log_optimized";
    let Some(profile) = RsProfile::from_vectors(r_vec, s_vec) else {
        return malformed(NAME, n);
    };
    let builder = ReportBuilder::new(NAME, n, Some(profile.capacity as f64)).params(&[
        ("tau", profile.tau as f64),
        ("s", profile.s as f64),
        ("delta", delta as f64),
        ("default_r", RsParams::new(profile, delta).r as f64),
    ]);
    if profile.s == 0 {
        return builder.finish(Err("s = 0: the zero function already dominates".into()), None);
    }
    let d1 = delta as u64 + 1;
    let lo = (profile.s as u64).div_ceil(d1).max(1);
    let hi = profile.tau as u64;
    let best = (lo..=hi)
        .map(|r| {
            let p = RsParams::with_r(profile, delta, r);
            (r, rs_log_coefficient(r as f64, p.theta as f64, p.ln_b))
        })
        .min_by(|a, b| a.1.total_cmp(&b.1));
    match best {
        Some((r, value)) => {
            builder.params(&[("argmin_r", r as f64), ("candidates", (hi - lo + 1) as f64)]).finish(Ok(()), Some(value))
        }
        None => builder.finish(Err(format!("no integer r with {lo} ≤ r ≤ τ={hi}")), None),
    }
}

/// Both forms of the total ⟨r,s⟩ bound, with r̃, θ̃, B̃_{s−1} in place of r, θ, B_{s−1}.
pub fn bound_total_rs(r_vec: &[u32], s_vec: &[u32], delta: usize, n: usize) -> BoundForms {
    let Some(profile) = RsProfile::from_vectors(r_vec, s_vec) else {
        return BoundForms { strong: malformed("total_rs_strong", n), log: malformed("total_rs_log", n) };
    };
    let build = |name: &'static str, coefficient: fn(f64, f64, f64) -> f64| {
        let builder = ReportBuilder::new(name, n, Some(profile.capacity as f64)).params(&[
            ("tau", profile.tau as f64),
            ("s", profile.s as f64),
            ("delta", delta as f64),
        ]);
        let Some(p) = TotalRsParams::new(profile, delta) else {
            return builder.finish(Err("needs δ > 0".into()), None);
        };
        let verdict = if profile.s == 0 {
            Err("s = 0: the zero function already dominates".into())
        } else if p.r > profile.tau as u64 {
            Err(format!("needs r̃ ≤ τ, got r̃={} τ={}", p.r, profile.tau))
        } else {
            Ok(())
        };
        builder
            .params(&[
                ("r_tilde", p.r as f64),
                ("theta_tilde", p.theta as f64),
                ("rho_tilde", p.rho),
                ("ln_b_tilde", p.ln_b),
            ])
            .finish(verdict, Some(coefficient(p.r as f64, p.theta as f64, p.ln_b)))
    };
    BoundForms {
        strong: build("total_rs_strong", rs_strong_coefficient),
        log: build("total_rs_log", rs_log_coefficient),
    }
}
