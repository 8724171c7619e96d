use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{clamp_probability, Trial, Witness};
use crate::bounds::{bound_rs, bound_total_rs, RsParams, RsProfile, TotalRsParams};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters shared by every trial of an ⟨r,s⟩ construction.
#[derive(Debug, Clone)]
pub struct RsPlan {
    /// Per-vertex cap of the sampled function, r or r̃.
    pub r: u32,
    /// Uniform demand s = max s_i.
    pub s: u32,
    pub p: f64,
    pub target: f64,
    /// N′[v] (closed) or N′(v) (open).
    pub hoods: Vec<Vec<usize>>,
    pub notes: Vec<String>,
}

impl RsPlan {
    pub fn closed(g: &Graph, r_vec: &[u32], s_vec: &[u32]) -> Result<Self> {
        let profile = profile(r_vec, s_vec)?;
        let params = RsParams::new(profile, g.min_degree());
        if params.r > profile.tau as u64 {
            return Err(Error::Precondition(format!("needs r = {} ≤ τ = {}", params.r, profile.tau)));
        }
        let bound = bound_rs(r_vec, s_vec, g.min_degree(), g.n());
        let target = bound.absolute.ok_or_else(|| Error::Precondition(bound.reason.unwrap_or_default()))?;
        Ok(Self::build(params.r, profile.s, params.theta, params.ln_b, target, g.restricted_neighborhoods(true)))
    }

    pub fn open(g: &Graph, r_vec: &[u32], s_vec: &[u32]) -> Result<Self> {
        let profile = profile(r_vec, s_vec)?;
        let params =
            TotalRsParams::new(profile, g.min_degree()).ok_or_else(|| Error::Precondition("needs δ > 0".into()))?;
        if params.r > profile.tau as u64 {
            return Err(Error::Precondition(format!("needs r̃ = {} ≤ τ = {}", params.r, profile.tau)));
        }
        let bound = bound_total_rs(r_vec, s_vec, g.min_degree(), g.n()).strong;
        let target = bound.absolute.ok_or_else(|| Error::Precondition(bound.reason.unwrap_or_default()))?;
        Ok(Self::build(params.r, profile.s, params.theta, params.ln_b, target, g.restricted_neighborhoods(false)))
    }

    fn build(r: u64, s: u32, theta: u64, ln_b: f64, target: f64, hoods: Vec<Vec<usize>>) -> Self {
        let mut notes = Vec::new();
        // p = 1 − (r/((1+θ)B))^{1/θ}
        let ln_ratio = (r as f64).ln() - (theta as f64).ln_1p() - ln_b;
        let raw = -(ln_ratio / theta as f64).exp_m1();
        let p = clamp_probability(raw, &mut notes);
        Self { r: r as u32, s, p, target, hoods, notes }
    }

    pub(super) fn trial(&self, g: &Graph, rng: &mut ChaCha8Rng) -> Trial {
        let n = g.n();
        let mut a = vec![0u32; n];
        for _ in 0..self.r {
            for slot in a.iter_mut() {
                if rng.gen_bool(self.p) {
                    *slot += 1;
                }
            }
        }
        let sums: Vec<u32> = self.hoods.iter().map(|h| h.iter().map(|&u| a[u]).sum()).collect();

        let mut lift = vec![0u32; n];
        let mut c = vec![0u32; n];
        for m in 0..self.s {
            let class: Vec<usize> = (0..n).filter(|&v| sums[v] == m).collect();
            if class.is_empty() {
                continue;
            }
            c.iter_mut().for_each(|x| *x = 0);
            let mut added = 0u64;
            for &v in &class {
                let hood = &self.hoods[v];
                let psi: u32 = hood.iter().map(|&u| c[u]).sum();
                let mut need = (self.s - m).saturating_sub(psi);
                if need == 0 {
                    continue;
                }
                let spare: u32 = hood.iter().map(|&u| self.r - a[u] - c[u]).sum();
                assert!(spare >= need, "vertex {v}: spare capacity {spare} below deficiency {need}");
                for &u in hood {
                    let room = (self.r - a[u] - c[u]).min(need);
                    c[u] += room;
                    need -= room;
                    added += room as u64;
                    if need == 0 {
                        break;
                    }
                }
            }
            assert!(added <= (self.s - m) as u64 * class.len() as u64);
            for (l, &x) in lift.iter_mut().zip(&c) {
                *l = (*l).max(x);
            }
        }

        let values: Vec<u32> = a.iter().zip(&lift).map(|(x, y)| x + y).collect();
        let weight = values.iter().map(|&x| x as u64).sum();
        Trial { index: 0, witness: Witness::Values(values), weight, repair_added: 0 }
    }
}

fn profile(r_vec: &[u32], s_vec: &[u32]) -> Result<RsProfile> {
    let profile = RsProfile::from_vectors(r_vec, s_vec)
        .ok_or_else(|| Error::InvalidSpec("r and s must be non-empty vectors of equal length".into()))?;
    if profile.s == 0 {
        return Err(Error::Precondition("needs max s_i ≥ 1".into()));
    }
    Ok(profile)
}
