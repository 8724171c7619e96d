use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{clamp_probability, Trial, Witness};
use crate::bounds::{bound_parametric, bound_parametric_alt, ParametricParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::DominationSpec;
use crate::verify::verify_set;

/// Parameters shared by every trial of a (k,l) construction.
#[derive(Debug, Clone)]
pub struct ParametricPlan {
    pub k: u32,
    pub l: u32,
    pub p: f64,
    pub target: f64,
    /// Name of the bound whose minimiser gives `p`.
    pub source: &'static str,
    /// N′(v), the δ lowest-indexed neighbours.
    pub hoods: Vec<Vec<usize>>,
    pub notes: Vec<String>,
}

impl ParametricPlan {
    pub fn new(g: &Graph, k: u32, l: u32) -> Result<Self> {
        let delta = g.min_degree();
        let params = ParametricParams::new(k, l, delta);
        if params.delta_bar < 0 {
            return Err(Error::Precondition(format!("needs δ ≥ max{{k, l−1}} = {}, got δ={delta}", params.phi)));
        }
        let n = g.n();
        let main = bound_parametric(k, l, delta, n);
        let alt = bound_parametric_alt(k, l, delta, n);

        // Each strong form is pn + n·b·(1−p)^{d+1} minimised at
        // p = 1 − (1/((1+d)b))^{1/d}; pick the smaller bound.
        let candidates = [
            (main.strong.absolute, params.delta_bar, params.ln_b_phi, "parametric_strong"),
            (alt.strong.absolute, params.delta_hat, params.ln_b_sum, "parametric_alt_strong"),
        ];
        let best = candidates
            .iter()
            .filter_map(|&(value, d, ln_b, name)| value.map(|v| (v, d, ln_b, name)))
            .min_by(|a, b| a.0.total_cmp(&b.0));

        let mut notes = Vec::new();
        let (target, p, source) = match best {
            Some((target, d, ln_b, name)) => {
                let d = d as f64;
                let raw = -((-(d.ln_1p() + ln_b)) / d).exp_m1();
                (target, clamp_probability(raw, &mut notes), name)
            }
            None => {
                // δ̄ = δ̂ = 0: only the log form applies, p = ln(D·b)/D with D = δ̄ + 1
                let target = main.log.absolute.expect("log form applies when δ ≥ φ");
                let big_d = params.delta_bar as f64 + 1.0;
                let raw = (big_d.ln() + params.ln_b_phi) / big_d;
                (target, clamp_probability(raw, &mut notes), "parametric_log")
            }
        };
        Ok(Self { k, l, p, target, source, hoods: g.restricted_neighborhoods(false), notes })
    }

    pub(super) fn trial(&self, g: &Graph, rng: &mut ChaCha8Rng) -> Trial {
        let n = g.n();
        let (k, l) = (self.k, self.l);
        let in_a: Vec<bool> = (0..n).map(|_| rng.gen_bool(self.p)).collect();
        let mut in_d = in_a.clone();

        let classes = k.max(l) as usize;
        let mut class_size = vec![[0u64; 2]; classes];
        let mut patch: Vec<[Vec<bool>; 2]> = vec![[vec![false; n], vec![false; n]]; classes];

        for v in 0..n {
            let hood = &self.hoods[v];
            let m = hood.iter().filter(|&&u| in_a[u]).count() as u32;
            // A_m for members (m ≤ l−2), B_m for the rest (m ≤ k−1)
            let (side, need) = if in_a[v] {
                if m + 2 > l {
                    continue;
                }
                (0, l - m - 1)
            } else {
                if m + 1 > k {
                    continue;
                }
                (1, k - m)
            };
            class_size[m as usize][side] += 1;
            let chosen: Vec<usize> = hood.iter().copied().filter(|&u| !in_a[u]).take(need as usize).collect();
            assert_eq!(chosen.len(), need as usize, "vertex {v}: N′(v) − A too small");
            for u in chosen {
                patch[m as usize][side][u] = true;
                in_d[u] = true;
            }
        }
        for m in 0..classes {
            let sizes =
                [patch[m][0].iter().filter(|&&b| b).count() as u64, patch[m][1].iter().filter(|&&b| b).count() as u64];
            assert!(sizes[0] <= (l as u64).saturating_sub(m as u64 + 1) * class_size[m][0]);
            assert!(sizes[1] <= (k as u64).saturating_sub(m as u64) * class_size[m][1]);
        }

        let repair_added = repair(g, k, l, &mut in_d);
        let set: Vec<usize> = (0..n).filter(|&v| in_d[v]).collect();
        Trial { index: 0, weight: set.len() as u64, witness: Witness::Set(set), repair_added }
    }
}

/// Patched vertices outside A are only guaranteed k+1 members of N[v] ∩ D,
/// which falls short of l when l ≥ k+2. Adds lowest-index neighbours of each
/// deficient vertex until D verifies; returns the number of vertices added.
fn repair(g: &Graph, k: u32, l: u32, in_d: &mut [bool]) -> u64 {
    let spec = DominationSpec::Parametric { k, l };
    let mut added = 0;
    loop {
        let set: Vec<usize> = (0..g.n()).filter(|&v| in_d[v]).collect();
        let report = verify_set(g, &spec, &set).expect("feasibility checked before trials");
        if report.valid {
            return added;
        }
        for deficiency in report.deficiencies {
            let v = deficiency.vertex;
            let required = if in_d[v] { l } else { k } as usize;
            let mut have = g.neighbors(v).iter().filter(|&&u| in_d[u]).count() + in_d[v] as usize;
            for &u in g.neighbors(v) {
                if have >= required {
                    break;
                }
                if !in_d[u] {
                    in_d[u] = true;
                    have += 1;
                    added += 1;
                }
            }
        }
    }
}
