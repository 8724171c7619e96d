//! Bounds that hold under a threshold condition on the minimum degree.

use serde::Serialize;

use super::cockayne::RsProfile;
use super::{BoundReport, ReportBuilder, Verdict};

/// Rautenbach–Volkmann k-tuple bound
/// (k ln(δ+1)/(δ+1) + Σ_{i<k} (k−i)/(i!(δ+1)^{k−i}))·n, valid when δ ≥ 2k ln(δ+1) − 1.
pub fn bound_rv(k: u32, delta: usize, n: usize) -> BoundReport {
    let d1 = delta as f64 + 1.0;
    let kf = k as f64;
    let threshold = 2.0 * kf * d1.ln() - 1.0;
    let verdict = if k == 0 {
        Err("k must be at least 1".to_string())
    } else if (delta as f64) < threshold {
        Err(format!("needs δ ≥ 2k ln(δ+1) − 1 = {threshold:.4}"))
    } else {
        Ok(())
    };
    let mut tail = 0.0;
    let mut factorial = 1.0f64;
    for i in 0..k {
        if i > 0 {
            factorial *= i as f64;
        }
        let denominator = factorial * d1.powi((k - i) as i32);
        tail += (k - i) as f64 / denominator;
    }
    let value = kf * d1.ln() / d1 + tail;
    ReportBuilder::new("rautenbach_volkmann", n, Some(n as f64))
        .params(&[("k", kf), ("delta", delta as f64), ("threshold", threshold)])
        .finish(verdict, Some(value))
}

/// (c/(δ+1) + e^{−0.5·q(c+1/c−2)})·q, the shape shared by the three c > 1 bounds.
pub(crate) fn exponential_shape(q: f64, delta: usize, c: f64) -> f64 {
    (c / (delta as f64 + 1.0) + (-0.5 * q * (c + 1.0 / c - 2.0)).exp()) * q
}

fn check_c_above_one(c: f64) -> Verdict {
    if c > 1.0 && c.is_finite() {
        Ok(())
    } else {
        Err(format!("needs a constant c > 1, got {c}"))
    }
}

/// k-tuple bound (c/(δ+1) + e^{−0.5k(c+1/c−2)})·k·n for δ ≥ ck − 1, c > 1.
pub fn bound_threshold_ktuple(k: u32, delta: usize, n: usize, c: f64) -> BoundReport {
    let kf = k as f64;
    let verdict = check_c_above_one(c).and_then(|()| {
        if k == 0 {
            Err("k must be at least 1".into())
        } else if (delta as f64) < c * kf - 1.0 {
            Err(format!("needs δ ≥ ck − 1 = {:.4}", c * kf - 1.0))
        } else {
            Ok(())
        }
    });
    ReportBuilder::new("threshold_ktuple", n, Some(n as f64))
        .params(&[("k", kf), ("delta", delta as f64), ("c", c)])
        .finish(verdict, Some(exponential_shape(kf, delta, c)))
}

/// (k,l) bound with μ = max{k,l} in place of k; needs δ ≥ cμ − 1.
pub fn bound_threshold_parametric(k: u32, l: u32, delta: usize, n: usize, c: f64) -> BoundReport {
    let mu = k.max(l) as f64;
    let verdict = check_c_above_one(c).and_then(|()| {
        if k == 0 || l == 0 {
            Err("k and l must be at least 1".into())
        } else if (delta as f64) < c * mu - 1.0 {
            Err(format!("needs δ ≥ cμ − 1 = {:.4}", c * mu - 1.0))
        } else {
            Ok(())
        }
    });
    ReportBuilder::new("threshold_parametric", n, Some(n as f64))
        .params(&[("k", k as f64), ("l", l as f64), ("mu", mu), ("delta", delta as f64), ("c", c)])
        .finish(verdict, Some(exponential_shape(mu, delta, c)))
}

/// ⟨r,s⟩ bound with s = max s_i in place of k; needs (δ+1)τ ≥ cs.
pub fn bound_threshold_rs(r_vec: &[u32], s_vec: &[u32], delta: usize, n: usize, c: f64) -> BoundReport {
    let Some(profile) = RsProfile::from_vectors(r_vec, s_vec) else {
        return ReportBuilder::new("threshold_rs", n, None)
            .finish(Err("r and s must be non-empty vectors of equal length".into()), None);
    };
    let s = profile.s as f64;
    let lhs = (delta as f64 + 1.0) * profile.tau as f64;
    let verdict = check_c_above_one(c).and_then(|()| {
        if profile.s == 0 {
            Err("s = 0: the zero function already dominates".into())
        } else if lhs < c * s {
            Err(format!("needs (δ+1)τ ≥ cs, got {lhs} < {:.4}", c * s))
        } else {
            Ok(())
        }
    });
    ReportBuilder::new("threshold_rs", n, Some(profile.capacity as f64))
        .params(&[("tau", profile.tau as f64), ("s", s), ("delta", delta as f64), ("c", c)])
        .finish(verdict, Some(exponential_shape(s, delta, c)))
}

/// Which parameter enters the logarithmic-threshold bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum LnVariant {
    KTuple { k: u32 },
    Parametric { k: u32, l: u32 },
    Rs(RsProfile),
}

/// (ln δ/(δ+1) + q/δ^{0.5c²})·n where q is k, μ = max{k,l} or s, valid when
/// q ≤ (1−c) ln δ for a constant 0 < c < 1.
pub fn bound_ln_threshold(variant: LnVariant, delta: usize, n: usize, c: f64) -> BoundReport {
    let (name, q, trivial) = match variant {
        LnVariant::KTuple { k } => ("ln_threshold_ktuple", k, n as f64),
        LnVariant::Parametric { k, l } => ("ln_threshold_parametric", k.max(l), n as f64),
        LnVariant::Rs(profile) => ("ln_threshold_rs", profile.s, profile.capacity as f64),
    };
    let d = delta as f64;
    let limit = (1.0 - c) * d.ln();
    let verdict = if !(c > 0.0 && c < 1.0) {
        Err(format!("needs a constant 0 < c < 1, got {c}"))
    } else if q == 0 {
        Err("parameter must be at least 1".into())
    } else if (q as f64) > limit {
        Err(format!("needs {q} ≤ (1−c) ln δ = {limit:.4}"))
    } else {
        Ok(())
    };
    let raw = (delta >= 1).then(|| d.ln() / (d + 1.0) + q as f64 / d.powf(0.5 * c * c));
    ReportBuilder::new(name, n, Some(trivial))
        .params(&[("q", q as f64), ("delta", d), ("c", c), ("limit", limit)])
        .finish(verdict, raw)
}

/// k < √(ln δ), the range of the Caro–Yuster asymptotic bound.
pub fn applicability_caro_yuster(k: u32, delta: usize) -> bool {
    delta >= 1 && (k as f64) < (delta as f64).ln().sqrt()
}
