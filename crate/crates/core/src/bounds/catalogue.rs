use super::{
    bound_caro_roditty, bound_classical, bound_ln_threshold, bound_parametric, bound_parametric_alt, bound_rs,
    bound_rs_log, bound_rs_log_optimized, bound_rv, bound_threshold_ktuple, bound_threshold_parametric,
    bound_threshold_rs, bound_total_rs, BoundReport, LnVariant, ReportBuilder, RsProfile,
};
use crate::spec::DominationSpec;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CatalogueOptions {
    /// Threshold constants. Values above 1 feed the δ ≥ cq − 1 family,
    /// values in (0, 1) the q ≤ (1−c) ln δ family.
    pub thresholds: Vec<f64>,
}

impl CatalogueOptions {
    pub fn with_thresholds(thresholds: impl IntoIterator<Item = f64>) -> Self {
        Self { thresholds: thresholds.into_iter().collect() }
    }
}

/// Every bound that speaks about `spec`, for a graph with minimum degree
/// `delta` and order `n`. Inapplicable bounds are included with their reason.
pub fn catalogue(spec: &DominationSpec, delta: usize, n: usize, options: &CatalogueOptions) -> Vec<BoundReport> {
    let mut rows = Vec::new();
    let above: Vec<f64> = options.thresholds.iter().copied().filter(|&c| c > 1.0).collect();
    let below: Vec<f64> = options.thresholds.iter().copied().filter(|&c| c > 0.0 && c < 1.0).collect();

    let missing = |name: &'static str, range: &str| {
        ReportBuilder::new(name, n, None).finish(Err(format!("no threshold constant c {range} supplied")), None)
    };

    let push_parametric = |rows: &mut Vec<BoundReport>, k: u32, l: u32| {
        let forms = bound_parametric(k, l, delta, n);
        rows.extend([forms.strong, forms.log]);
        let forms = bound_parametric_alt(k, l, delta, n);
        rows.extend([forms.strong, forms.log]);
    };

    let push_rs = |rows: &mut Vec<BoundReport>, r: &[u32], s: &[u32]| {
        rows.push(bound_rs(r, s, delta, n));
        rows.push(bound_rs_log(r, s, delta, n));
        rows.push(bound_rs_log_optimized(r, s, delta, n));
    };

    match spec {
        DominationSpec::Classical | DominationSpec::KTuple { .. } => {
            let k = match spec {
                DominationSpec::KTuple { k } => *k,
                _ => 1,
            };
            if k == 1 {
                rows.push(bound_classical(delta, n));
                rows.push(bound_caro_roditty(delta, n));
            }
            push_rs(&mut rows, &vec![1; n], &vec![k; n]);
            push_parametric(&mut rows, k, k);
            rows.push(bound_rv(k, delta, n));
            if above.is_empty() {
                rows.push(missing("threshold_ktuple", "> 1"));
            }
            rows.extend(above.iter().map(|&c| bound_threshold_ktuple(k, delta, n, c)));
            if below.is_empty() {
                rows.push(missing("ln_threshold_ktuple", "in (0,1)"));
            }
            rows.extend(below.iter().map(|&c| bound_ln_threshold(LnVariant::KTuple { k }, delta, n, c)));
        }
        DominationSpec::KDominating { .. } | DominationSpec::TotalK { .. } | DominationSpec::Parametric { .. } => {
            let (k, l) = spec.parametric_equivalent().expect("set-type spec");
            if let DominationSpec::TotalK { k } = spec {
                let forms = bound_total_rs(&vec![1; n], &vec![*k; n], delta, n);
                rows.extend([forms.strong, forms.log]);
            }
            push_parametric(&mut rows, k, l);
            if above.is_empty() {
                rows.push(missing("threshold_parametric", "> 1"));
            }
            rows.extend(above.iter().map(|&c| bound_threshold_parametric(k, l, delta, n, c)));
            if below.is_empty() {
                rows.push(missing("ln_threshold_parametric", "in (0,1)"));
            }
            rows.extend(below.iter().map(|&c| bound_ln_threshold(LnVariant::Parametric { k, l }, delta, n, c)));
        }
        DominationSpec::BraceK { .. } | DominationSpec::Rs { .. } => {
            let (r, s) = match spec {
                DominationSpec::BraceK { k } => (vec![*k; n], vec![*k; n]),
                DominationSpec::Rs { r, s } => (r.clone(), s.clone()),
                _ => unreachable!(),
            };
            push_rs(&mut rows, &r, &s);
            if above.is_empty() {
                rows.push(missing("threshold_rs", "> 1"));
            }
            rows.extend(above.iter().map(|&c| bound_threshold_rs(&r, &s, delta, n, c)));
            if let Some(profile) = RsProfile::from_vectors(&r, &s) {
                if below.is_empty() {
                    rows.push(missing("ln_threshold_rs", "in (0,1)"));
                }
                rows.extend(below.iter().map(|&c| bound_ln_threshold(LnVariant::Rs(profile), delta, n, c)));
            }
        }
        DominationSpec::TotalRs { r, s } => {
            let forms = bound_total_rs(r, s, delta, n);
            rows.extend([forms.strong, forms.log]);
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(rows: &[BoundReport]) -> Vec<&str> {
        rows.iter().map(|r| r.name.as_str()).collect()
    }

    #[test]
    fn classical_rows() {
        let rows = catalogue(&DominationSpec::Classical, 2, 4, &CatalogueOptions::default());
        let classical = rows.iter().find(|r| r.name == "classical").unwrap();
        let cr = rows.iter().find(|r| r.name == "caro_roditty").unwrap();
        assert!(cr.absolute.unwrap() < classical.absolute.unwrap());
        assert!(names(&rows).contains(&"rs_log"));
    }

    #[test]
    fn ktuple_rows_on_k10() {
        let rows = catalogue(&DominationSpec::KTuple { k: 3 }, 9, 10, &CatalogueOptions::default());
        let names = names(&rows);
        for expected in ["parametric_alt_strong", "threshold_ktuple", "rautenbach_volkmann", "rs_strong"] {
            assert!(names.contains(&expected), "{expected}");
        }
        let threshold = rows.iter().find(|r| r.name == "threshold_ktuple").unwrap();
        assert!(!threshold.applicable);

        let rows = catalogue(&DominationSpec::KTuple { k: 3 }, 9, 10, &CatalogueOptions::with_thresholds([2.0, 0.5]));
        let threshold = rows.iter().find(|r| r.name == "threshold_ktuple").unwrap();
        assert!(threshold.applicable);
        assert!(rows.iter().any(|r| r.name == "ln_threshold_ktuple"));
    }

    #[test]
    fn function_rows() {
        let rows = catalogue(&DominationSpec::BraceK { k: 2 }, 3, 6, &CatalogueOptions::with_thresholds([2.0]));
        assert_eq!(names(&rows)[..4], ["rs_strong", "rs_log", "rs_log_optimized", "threshold_rs"]);
        let spec = DominationSpec::TotalRs { r: vec![1; 5], s: vec![1; 5] };
        assert_eq!(names(&catalogue(&spec, 2, 5, &CatalogueOptions::default())), ["total_rs_strong", "total_rs_log"]);
    }
}
