//! Upper bounds on domination parameters.
//!
//! Every bound is returned as a [`BoundReport`]: the coefficient of `n`, the
//! absolute value for the given order, an applicability verdict with a reason,
//! and a snapshot of the derived parameters. Formulas are evaluated in log
//! space so that binomials such as C(1001·r, s−1) never overflow.
//!
//! Reports are only given a value when their precondition holds. The raw
//! value of a failed precondition can still be requested with
//! [`BoundReport::force`], which is how comparison tables show a bound
//! outside its admissible range.

mod binomial;
mod catalogue;
mod classical;
mod cockayne;
mod parametric;
mod threshold;

use std::collections::BTreeMap;

use serde::Serialize;

pub use binomial::{binomial_exact, ln_factorial, log_add, log_binomial, EXACT_TOP};
pub use catalogue::{catalogue, CatalogueOptions};
pub use classical::{bound_caro_roditty, bound_classical};
pub use cockayne::{
    bound_rs, bound_rs_log, bound_rs_log_optimized, bound_total_rs, RsParams, RsProfile, TotalRsParams,
};
pub use parametric::{bound_parametric, bound_parametric_alt, ParametricParams};
pub(crate) use threshold::exponential_shape;
pub use threshold::{
    applicability_caro_yuster, bound_ln_threshold, bound_rv, bound_threshold_ktuple, bound_threshold_parametric,
    bound_threshold_rs, LnVariant,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub applicable: bool,
    pub reason: Option<String>,
    /// Coefficient of n; absent when the bound does not apply (unless forced).
    pub coefficient: Option<f64>,
    /// coefficient · n.
    pub absolute: Option<f64>,
    /// The value is at least the trivial bound (n for sets, Σ r_i for functions).
    pub vacuous: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub forced: bool,
    pub params: BTreeMap<String, f64>,
    #[serde(skip)]
    raw: Option<f64>,
    #[serde(skip)]
    n: usize,
    #[serde(skip)]
    trivial: Option<f64>,
}

impl BoundReport {
    /// Coefficient whenever the formula is finite, regardless of applicability.
    pub fn raw_coefficient(&self) -> Option<f64> {
        self.raw
    }

    /// Fills in the value of an inapplicable bound from its formula, keeping
    /// `applicable = false` and the reason.
    pub fn force(mut self) -> Self {
        if !self.applicable && self.raw.is_some() {
            self.forced = true;
            self.set_value(self.raw);
        }
        self
    }

    fn set_value(&mut self, coefficient: Option<f64>) {
        self.coefficient = coefficient;
        self.absolute = coefficient.map(|c| c * self.n as f64);
        self.vacuous = match (self.absolute, self.trivial) {
            (Some(a), Some(t)) => a >= t,
            _ => false,
        };
    }
}

/// Strong (exact-minimisation) and logarithmic forms of the same bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundForms {
    pub strong: BoundReport,
    pub log: BoundReport,
}

/// Applicability verdict used while assembling a report.
pub(crate) type Verdict = std::result::Result<(), String>;

pub(crate) struct ReportBuilder {
    name: &'static str,
    n: usize,
    trivial: Option<f64>,
    params: BTreeMap<String, f64>,
}

impl ReportBuilder {
    /// `trivial` is the bound that always holds (n for sets, Σ r_i for functions).
    pub(crate) fn new(name: &'static str, n: usize, trivial: Option<f64>) -> Self {
        Self { name, n, trivial, params: BTreeMap::new() }
    }

    pub(crate) fn param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub(crate) fn params(mut self, pairs: &[(&str, f64)]) -> Self {
        for &(k, v) in pairs {
            self.params.insert(k.to_string(), v);
        }
        self
    }

    pub(crate) fn finish(self, verdict: Verdict, raw: Option<f64>) -> BoundReport {
        let raw = raw.filter(|v| v.is_finite());
        let verdict = match (verdict, raw) {
            (Ok(()), None) => Err("formula undefined for these parameters".to_string()),
            (v, _) => v,
        };
        let mut report = BoundReport {
            name: self.name.to_string(),
            applicable: verdict.is_ok(),
            reason: verdict.err(),
            coefficient: None,
            absolute: None,
            vacuous: false,
            forced: false,
            params: self.params,
            raw,
            n: self.n,
            trivial: self.trivial,
        };
        if report.applicable {
            report.set_value(raw);
        }
        report
    }
}

/// Coefficient of the strong Cockayne-type bound
/// (1 − (rρ)^ρ / ((1+ρ)^{1+ρ} B^ρ))·r with ρ = 1/θ, given ln B.
pub(crate) fn rs_strong_coefficient(r: f64, theta: f64, ln_b: f64) -> f64 {
    let rho = 1.0 / theta;
    let ln_frac = rho * ((r * rho).ln() - ln_b) - (1.0 + rho) * rho.ln_1p();
    -ln_frac.exp_m1() * r
}

/// Coefficient of the logarithmic Cockayne-type bound
/// (ln(θ+1) + ln B − ln r + 1)/(θ+1)·r.
pub(crate) fn rs_log_coefficient(r: f64, theta: f64, ln_b: f64) -> f64 {
    (theta.ln_1p() + ln_b - r.ln() + 1.0) / (theta + 1.0) * r
}

/// Coefficient 1 − d/((1+d)^{1+1/d} b^{1/d}) shared by the parametric bounds.
pub(crate) fn set_strong_coefficient(d: f64, ln_b: f64) -> f64 {
    let ln_frac = d.ln() - (1.0 + 1.0 / d) * d.ln_1p() - ln_b / d;
    -ln_frac.exp_m1()
}

/// Coefficient (ln D + ln b + 1)/D shared by the parametric log bounds.
pub(crate) fn set_log_coefficient(big_d: f64, ln_b: f64) -> f64 {
    (big_d.ln() + ln_b + 1.0) / big_d
}
