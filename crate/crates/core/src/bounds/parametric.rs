//! Bounds for (k,l)-domination.

use serde::Serialize;

use super::binomial::{log_add, log_binomial};
use super::{set_log_coefficient, set_strong_coefficient, BoundForms, ReportBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParametricParams {
    pub k: u32,
    pub l: u32,
    /// φ = max{k, l−1}.
    pub phi: u32,
    /// μ = max{k, l}.
    pub mu: u32,
    /// δ̄ = δ − φ.
    pub delta_bar: i64,
    /// δ̂ = δ − max{k,l} + 1.
    pub delta_hat: i64,
    /// ln b_{φ−1}, b_t = C(δ, t).
    pub ln_b_phi: f64,
    /// ln(b_{k−1} + b_{l−2}) with b_{−1} = 0.
    pub ln_b_sum: f64,
    /// ln b̃_{k−1} = ln C(δ+1, k−1).
    pub ln_b_tilde: f64,
}

impl ParametricParams {
    pub fn new(k: u32, l: u32, delta: usize) -> Self {
        let phi = k.max(l.saturating_sub(1));
        let mu = k.max(l);
        let d = delta as u64;
        Self {
            k,
            l,
            phi,
            mu,
            delta_bar: delta as i64 - phi as i64,
            delta_hat: delta as i64 - mu as i64 + 1,
            ln_b_phi: log_binomial(d, phi as i64 - 1),
            ln_b_sum: log_add(log_binomial(d, k as i64 - 1), log_binomial(d, l as i64 - 2)),
            ln_b_tilde: log_binomial(d + 1, k as i64 - 1),
        }
    }

    fn snapshot(&self) -> [(&'static str, f64); 8] {
        [
            ("k", self.k as f64),
            ("l", self.l as f64),
            ("phi", self.phi as f64),
            ("mu", self.mu as f64),
            ("delta_bar", self.delta_bar as f64),
            ("delta_hat", self.delta_hat as f64),
            ("ln_b_phi", self.ln_b_phi),
            ("ln_b_sum", self.ln_b_sum),
        ]
    }
}

fn invalid_kl(k: u32, l: u32) -> Option<String> {
    (k == 0 || l == 0).then(|| format!("k and l must be at least 1, got k={k} l={l}"))
}

/// Strong form 1 − δ̄/((1+δ̄)^{1+1/δ̄} b_{φ−1}^{1/δ̄}) (needs δ̄ > 0) and
/// log form (ln(δ−φ+1) + ln b_{φ−1} + 1)/(δ−φ+1) (needs δ ≥ φ).
pub fn bound_parametric(k: u32, l: u32, delta: usize, n: usize) -> BoundForms {
    let p = ParametricParams::new(k, l, delta);
    let builder = |name| ReportBuilder::new(name, n, Some(n as f64)).params(&p.snapshot()).param("delta", delta as f64);
    let bad = invalid_kl(k, l);

    let strong_verdict = match &bad {
        Some(msg) => Err(msg.clone()),
        None if p.delta_bar <= 0 => Err(format!("needs δ̄ = δ − φ > 0, got δ̄={}", p.delta_bar)),
        None => Ok(()),
    };
    let strong_raw = (p.delta_bar > 0).then(|| set_strong_coefficient(p.delta_bar as f64, p.ln_b_phi));

    let log_verdict = match &bad {
        Some(msg) => Err(msg.clone()),
        None if p.delta_bar < 0 => Err(format!("needs δ ≥ φ = {}", p.phi)),
        None => Ok(()),
    };
    let log_raw = (p.delta_bar >= 0).then(|| set_log_coefficient(p.delta_bar as f64 + 1.0, p.ln_b_phi));

    BoundForms {
        strong: builder("parametric_strong").finish(strong_verdict, strong_raw),
        log: builder("parametric_log").finish(log_verdict, log_raw),
    }
}

/// Strong form 1 − δ̂/((1+δ̂)^{1+1/δ̂}(b_{k−1}+b_{l−2})^{1/δ̂}) (needs δ̂ > 0) and
/// log form (ln(δ̂+1) + ln(b_{k−1}+b_{l−2}) + 1)/(δ̂+1) (needs δ ≥ max{k, l−1}).
pub fn bound_parametric_alt(k: u32, l: u32, delta: usize, n: usize) -> BoundForms {
    let p = ParametricParams::new(k, l, delta);
    let builder = |name| ReportBuilder::new(name, n, Some(n as f64)).params(&p.snapshot()).param("delta", delta as f64);
    let bad = invalid_kl(k, l);

    let strong_verdict = match &bad {
        Some(msg) => Err(msg.clone()),
        None if p.delta_hat <= 0 => Err(format!("needs δ̂ = δ − max{{k,l}} + 1 > 0, got δ̂={}", p.delta_hat)),
        None => Ok(()),
    };
    let strong_raw = (p.delta_hat > 0).then(|| set_strong_coefficient(p.delta_hat as f64, p.ln_b_sum));

    let log_verdict = match &bad {
        Some(msg) => Err(msg.clone()),
        None if p.delta_bar < 0 => Err(format!("needs δ ≥ max{{k, l−1}} = {}", p.phi)),
        None => Ok(()),
    };
    let log_raw = (p.delta_hat >= 0).then(|| set_log_coefficient(p.delta_hat as f64 + 1.0, p.ln_b_sum));

    BoundForms {
        strong: builder("parametric_alt_strong").finish(strong_verdict, strong_raw),
        log: builder("parametric_alt_log").finish(log_verdict, log_raw),
    }
}
