//! Randomized constructions that realise the probabilistic upper bounds.
//!
//! Each trial samples a random set or function, patches every vertex the
//! sample leaves short, and verifies the result. Trials are driven by a
//! ChaCha8 stream per trial index, so the outcome of trial `i` depends only
//! on `(graph, spec, seed, i)` and trials can run in any order or in parallel.

mod parametric;
mod rs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::DominationSpec;

pub use parametric::ParametricPlan;
pub use rs::RsPlan;

/// Trials evaluated per parallel batch in [`Construction::run`].
const BATCH: u64 = 32;

/// A dominating set or function produced by a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Set(Vec<usize>),
    Values(Vec<u32>),
}

/// One sampled-and-repaired witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trial {
    pub index: u64,
    #[serde(flatten)]
    pub witness: Witness,
    pub weight: u64,
    /// Vertices added after the sampled-and-patched set still failed verification.
    #[serde(skip_serializing_if = "is_zero")]
    pub repair_added: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructionResult {
    pub spec: DominationSpec,
    #[serde(flatten)]
    pub witness: Witness,
    pub weight: u64,
    /// Trials consumed: the winning index + 1, or every trial when none met the target.
    pub trials: u64,
    pub winning_trial: u64,
    pub seed: u64,
    /// Expected-weight bound of the construction.
    pub target: f64,
    pub met_target: bool,
    /// Selection probability used by every trial.
    pub p: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "is_zero")]
    pub repair_added: u64,
    /// Weight of every consumed trial, in index order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<u64>>,
}

enum Kind {
    Rs(RsPlan),
    Parametric(ParametricPlan),
}

/// A prepared construction for one graph and specification.
pub struct Construction<'g> {
    graph: &'g Graph,
    spec: DominationSpec,
    kind: Kind,
}

impl<'g> Construction<'g> {
    /// Checks feasibility and the construction's preconditions, then fixes
    /// the selection probability and the target. Set variants go through
    /// their (k,l) equivalent; `bracek` through ⟨r,s⟩ with r = s = k.
    pub fn new(graph: &'g Graph, spec: &DominationSpec) -> Result<Self> {
        spec.check_feasible(graph)?;
        let n = graph.n();
        let kind = match spec {
            DominationSpec::BraceK { k } => Kind::Rs(RsPlan::closed(graph, &vec![*k; n], &vec![*k; n])?),
            DominationSpec::Rs { r, s } => Kind::Rs(RsPlan::closed(graph, r, s)?),
            DominationSpec::TotalRs { r, s } => Kind::Rs(RsPlan::open(graph, r, s)?),
            _ => {
                let (k, l) = spec.parametric_equivalent().expect("set variant");
                Kind::Parametric(ParametricPlan::new(graph, k, l)?)
            }
        };
        Ok(Self { graph, spec: spec.clone(), kind })
    }

    pub fn spec(&self) -> &DominationSpec {
        &self.spec
    }

    pub fn p(&self) -> f64 {
        match &self.kind {
            Kind::Rs(plan) => plan.p,
            Kind::Parametric(plan) => plan.p,
        }
    }

    /// The expected-weight bound a trial aims for.
    pub fn target(&self) -> f64 {
        match &self.kind {
            Kind::Rs(plan) => plan.target,
            Kind::Parametric(plan) => plan.target,
        }
    }

    pub fn notes(&self) -> &[String] {
        match &self.kind {
            Kind::Rs(plan) => &plan.notes,
            Kind::Parametric(plan) => &plan.notes,
        }
    }

    /// Runs trial `index` of the stream seeded by `seed`. The witness is
    /// verified against the requested specification before it is returned.
    pub fn trial(&self, seed: u64, index: u64) -> Trial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let mut trial = match &self.kind {
            Kind::Rs(plan) => plan.trial(self.graph, &mut rng),
            Kind::Parametric(plan) => plan.trial(self.graph, &mut rng),
        };
        trial.index = index;
        let report = match &trial.witness {
            Witness::Set(set) => crate::verify::verify_set(self.graph, &self.spec, set),
            Witness::Values(values) => {
                let caps = self.spec.function_rule(self.graph.n()).expect("function variant").caps;
                let f = crate::verify::VertexFunction::new(values.clone(), caps);
                crate::verify::verify_function(self.graph, &self.spec, &f)
            }
        }
        .expect("specification checked when the construction was prepared");
        assert!(report.valid, "trial {index} produced an invalid witness: {:?}", report.deficiencies);
        assert_eq!(report.weight, trial.weight);
        trial
    }

    /// Trials `0..count`, computed in parallel and returned in index order.
    pub fn run_trials(&self, seed: u64, count: u64) -> Vec<Trial> {
        (0..count).into_par_iter().map(|i| self.trial(seed, i)).collect()
    }

    /// Runs trials until one meets ⌈target⌉ or `max_trials` are spent. The
    /// winner is the lowest index meeting the target; otherwise the lightest
    /// trial (lowest index on ties) is returned with `met_target = false`.
    pub fn run(&self, seed: u64, max_trials: u64) -> Result<ConstructionResult> {
        if max_trials == 0 {
            return Err(Error::InvalidSpec("max_trials must be at least 1".into()));
        }
        let goal = self.target().ceil();
        let mut trace = Vec::new();
        let mut best: Option<Trial> = None;
        let mut start = 0;
        let mut winner = None;
        while start < max_trials && winner.is_none() {
            let end = (start + BATCH).min(max_trials);
            let batch: Vec<Trial> = (start..end).into_par_iter().map(|i| self.trial(seed, i)).collect();
            for trial in batch {
                trace.push(trial.weight);
                if (trial.weight as f64) <= goal {
                    winner = Some(trial);
                    break;
                }
                if best.as_ref().is_none_or(|b| trial.weight < b.weight) {
                    best = Some(trial);
                }
            }
            start = end;
        }
        let met_target = winner.is_some();
        let chosen = winner.or(best).expect("at least one trial ran");
        Ok(ConstructionResult {
            spec: self.spec.clone(),
            weight: chosen.weight,
            trials: trace.len() as u64,
            winning_trial: chosen.index,
            seed,
            target: self.target(),
            met_target,
            p: self.p(),
            notes: self.notes().to_vec(),
            repair_added: chosen.repair_added,
            trace: Some(trace),
            witness: chosen.witness,
        })
    }
}

/// Construction for any specification; see [`Construction::new`].
pub fn construct(g: &Graph, spec: &DominationSpec, seed: u64, max_trials: u64) -> Result<ConstructionResult> {
    Construction::new(g, spec)?.run(seed, max_trials)
}

/// s-dominating r-function built from r rounds of vertex sampling over the
/// closed restricted neighbourhoods, then repaired class by class.
pub fn construct_rs(g: &Graph, r: &[u32], s: &[u32], seed: u64, max_trials: u64) -> Result<ConstructionResult> {
    construct(g, &DominationSpec::Rs { r: r.to_vec(), s: s.to_vec() }, seed, max_trials)
}

/// As [`construct_rs`] over open restricted neighbourhoods.
pub fn construct_total_rs(g: &Graph, r: &[u32], s: &[u32], seed: u64, max_trials: u64) -> Result<ConstructionResult> {
    construct(g, &DominationSpec::TotalRs { r: r.to_vec(), s: s.to_vec() }, seed, max_trials)
}

/// (k,l)-dominating set from a random set patched through N′(v).
pub fn construct_parametric(g: &Graph, k: u32, l: u32, seed: u64, max_trials: u64) -> Result<ConstructionResult> {
    construct(g, &DominationSpec::Parametric { k, l }, seed, max_trials)
}

/// Clamps a formula probability into [0, 1], noting when it had to.
fn clamp_probability(p: f64, notes: &mut Vec<String>) -> f64 {
    if p.is_nan() {
        notes.push("selection probability undefined; using p = 1".into());
        1.0
    } else if p < 0.0 {
        notes.push(format!("selection probability {p:.6} clamped to 0; repair does all the work"));
        0.0
    } else if p > 1.0 {
        notes.push(format!("selection probability {p:.6} clamped to 1"));
        1.0
    } else {
        p
    }
}
