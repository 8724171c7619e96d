//! Exhaustive domination numbers for small graphs.

use serde::Serialize;

use crate::construct::Witness;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::DominationSpec;
use crate::verify::{verify_function, verify_set, VertexFunction};

pub const DEFAULT_SET_LIMIT: usize = 20;
pub const DEFAULT_FUNCTION_LIMIT: usize = 12;
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactResult {
    pub value: u64,
    #[serde(flatten)]
    pub witness: Witness,
    pub nodes_explored: u64,
    pub spec: DominationSpec,
}

/// Resource guard for the function search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctionLimits {
    pub max_n: usize,
    pub max_nodes: u64,
}

impl Default for FunctionLimits {
    fn default() -> Self {
        Self { max_n: DEFAULT_FUNCTION_LIMIT, max_nodes: DEFAULT_NODE_LIMIT }
    }
}

/// Optional overrides of the default limits, for callers that accept either kind of spec.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_n: Option<usize>,
    pub max_nodes: Option<u64>,
}

/// Exact value of any specification under the default or overridden limits.
pub fn exact(g: &Graph, spec: &DominationSpec, limits: ExactLimits) -> Result<ExactResult> {
    if spec.is_set_type() {
        exact_set_number(g, spec, limits.max_n.unwrap_or(DEFAULT_SET_LIMIT))
    } else {
        let defaults = FunctionLimits::default();
        exact_function_number(
            g,
            spec,
            FunctionLimits {
                max_n: limits.max_n.unwrap_or(defaults.max_n),
                max_nodes: limits.max_nodes.unwrap_or(defaults.max_nodes),
            },
        )
    }
}

fn refuse(message: String, nodes_explored: u64, best_known: Option<u64>) -> Error {
    Error::ResourceLimit { message, nodes_explored, best_known }
}

/// Minimum size of a set satisfying a set-type `spec`, searching sizes in
/// increasing order so that the first witness found is optimal.
pub fn exact_set_number(g: &Graph, spec: &DominationSpec, limit_n: usize) -> Result<ExactResult> {
    let rule = spec
        .set_rule()
        .ok_or_else(|| Error::WrongSpecKind(format!("`{spec}` is a function variant; use exact_function_number")))?;
    let n = g.n();
    if n > limit_n.min(64) {
        return Err(refuse(format!("n = {n} exceeds the set-search limit {}", limit_n.min(64)), 0, None));
    }
    spec.check_feasible(g)?;
    let (out_req, in_req) = rule.closed_form();
    let hoods: Vec<u64> = g.vertices().map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &u| m | 1 << u)).collect();
    let mut search = SetSearch { n, hoods, out_req, in_req, nodes: 0 };
    for size in 0..=n {
        if let Some(mask) = search.fill(0, 0, size) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let report = verify_set(g, spec, &set)?;
            assert!(report.valid, "search returned a set the verifier rejects");
            return Ok(ExactResult {
                value: set.len() as u64,
                witness: Witness::Set(set),
                nodes_explored: search.nodes,
                spec: spec.clone(),
            });
        }
    }
    unreachable!("V(G) satisfies every feasible set specification")
}

struct SetSearch {
    n: usize,
    /// N[v] as bitmasks.
    hoods: Vec<u64>,
    out_req: u32,
    in_req: u32,
    nodes: u64,
}

impl SetSearch {
    /// Extends `chosen` with vertices ≥ `next`, at most `budget` more.
    fn fill(&mut self, chosen: u64, next: usize, budget: usize) -> Option<u64> {
        self.nodes += 1;
        let available = if next >= 64 { 0 } else { !0u64 << next } & mask_below(self.n);
        let mut worst = 0;
        let mut done = true;
        for v in 0..self.n {
            let have = (self.hoods[v] & chosen).count_ones();
            let member = chosen >> v & 1 == 1;
            let now = if member { self.in_req } else { self.out_req }.saturating_sub(have);
            done &= now == 0;
            // v may still join the set, in which case it needs in_req
            let deficit =
                if !member && available >> v & 1 == 1 { now.min(self.in_req.saturating_sub(have)) } else { now };
            if deficit > (self.hoods[v] & available).count_ones() {
                return None;
            }
            worst = worst.max(deficit);
        }
        if done {
            return Some(chosen);
        }
        if budget == 0 || worst as usize > budget || next >= self.n {
            return None;
        }
        self.fill(chosen | 1 << next, next + 1, budget - 1).or_else(|| self.fill(chosen, next + 1, budget))
    }
}

fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Minimum weight of a function satisfying `bracek`, `rs` or `totalrs`, by
/// depth-first assignment over vertices in ascending-degree order.
pub fn exact_function_number(g: &Graph, spec: &DominationSpec, limits: FunctionLimits) -> Result<ExactResult> {
    let rule = spec
        .function_rule(g.n())
        .ok_or_else(|| Error::WrongSpecKind(format!("`{spec}` is a set variant; use exact_set_number")))?;
    let n = g.n();
    if n > limits.max_n {
        return Err(refuse(format!("n = {n} exceeds the function-search limit {}", limits.max_n), 0, None));
    }
    spec.check_feasible(g)?;

    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    // watchers[u]: vertices whose neighbourhood contains u
    let watchers: Vec<Vec<usize>> = g
        .vertices()
        .map(|u| {
            let mut w = g.neighbors(u).to_vec();
            if !rule.open {
                w.push(u);
            }
            w
        })
        .collect();
    let mut spare = vec![0u64; n];
    for (list, &cap) in watchers.iter().zip(&rule.caps) {
        for &w in list {
            spare[w] += cap as u64;
        }
    }
    let mut search = FunctionSearch {
        order,
        watchers,
        caps: rule.caps.clone(),
        demands: rule.demands.iter().map(|&d| d as u64).collect(),
        sums: vec![0; n],
        spare,
        values: vec![0; n],
        best: rule.caps.iter().map(|&c| c as u64).sum(),
        best_values: rule.caps.clone(),
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    if !search.descend(0, 0) {
        return Err(refuse(format!("search exceeded {} nodes", limits.max_nodes), search.nodes, Some(search.best)));
    }
    let f = VertexFunction::new(search.best_values.clone(), rule.caps);
    let report = verify_function(g, spec, &f)?;
    assert!(report.valid, "search returned a function the verifier rejects");
    Ok(ExactResult {
        value: search.best,
        witness: Witness::Values(search.best_values),
        nodes_explored: search.nodes,
        spec: spec.clone(),
    })
}

struct FunctionSearch {
    order: Vec<usize>,
    watchers: Vec<Vec<usize>>,
    caps: Vec<u32>,
    demands: Vec<u64>,
    /// Assigned weight inside each neighbourhood.
    sums: Vec<u64>,
    /// Total cap of the unassigned part of each neighbourhood.
    spare: Vec<u64>,
    values: Vec<u32>,
    best: u64,
    best_values: Vec<u32>,
    nodes: u64,
    max_nodes: u64,
}

impl FunctionSearch {
    /// Returns false when the node budget ran out.
    fn descend(&mut self, depth: usize, weight: u64) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        // Each unit of weight raises one neighbourhood sum by one.
        let mut lower = 0;
        for w in 0..self.demands.len() {
            let missing = self.demands[w].saturating_sub(self.sums[w]);
            if missing > self.spare[w] {
                return true;
            }
            lower = lower.max(missing);
        }
        if weight + lower >= self.best {
            return true;
        }
        if depth == self.order.len() {
            self.best = weight;
            self.best_values = self.values.clone();
            return true;
        }
        let u = self.order[depth];
        let cap = self.caps[u];
        for &w in &self.watchers[u] {
            self.spare[w] -= cap as u64;
        }
        let mut within_budget = true;
        for x in 0..=cap {
            for &w in &self.watchers[u] {
                self.sums[w] += x as u64;
            }
            self.values[u] = x;
            within_budget = self.descend(depth + 1, weight + x as u64);
            for &w in &self.watchers[u] {
                self.sums[w] -= x as u64;
            }
            if !within_budget {
                break;
            }
        }
        self.values[u] = 0;
        for &w in &self.watchers[u] {
            self.spare[w] += cap as u64;
        }
        within_budget
    }
}
