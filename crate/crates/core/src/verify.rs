//! Certificates for every domination variant, checked over full neighbourhoods.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spec::DominationSpec;

/// Integer labelling of the vertices together with per-vertex caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexFunction {
    pub values: Vec<u32>,
    pub caps: Vec<u32>,
}

impl VertexFunction {
    pub fn new(values: Vec<u32>, caps: Vec<u32>) -> Self {
        Self { values, caps }
    }

    /// Characteristic function of `set` on `n` vertices with unit caps.
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut values = vec![0; n];
        for &v in set {
            values[v] = 1;
        }
        Self { values, caps: vec![1; n] }
    }

    pub fn weight(&self) -> u64 {
        weight(self)
    }

    /// Whether 0 ≤ f(v) ≤ cap(v) holds everywhere.
    pub fn is_r_function(&self) -> bool {
        self.values.len() == self.caps.len() && self.values.iter().zip(&self.caps).all(|(v, c)| v <= c)
    }
}

/// |f| = Σ f(v).
pub fn weight(f: &VertexFunction) -> u64 {
    f.values.iter().map(|&v| v as u64).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficiency {
    pub vertex: usize,
    pub required: u64,
    pub achieved: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub weight: u64,
    pub deficiencies: Vec<Deficiency>,
}

impl VerifyReport {
    fn new(weight: u64, deficiencies: Vec<Deficiency>) -> Self {
        Self { valid: deficiencies.is_empty(), weight, deficiencies }
    }
}

/// Checks a vertex set against a set-type specification. Duplicate entries
/// in `set` count once. Every failing vertex is reported.
pub fn verify_set(g: &Graph, spec: &DominationSpec, set: &[usize]) -> Result<VerifyReport> {
    let rule = spec
        .set_rule()
        .ok_or_else(|| Error::WrongSpecKind(format!("`{spec}` is a function variant; use verify_function")))?;
    spec.check_feasible(g)?;
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        member[v] = true;
    }
    let mut deficiencies = Vec::new();
    for v in g.vertices() {
        let required = if member[v] { rule.in_req } else { rule.out_req } as u64;
        if required == 0 {
            continue;
        }
        let mut achieved = g.neighbors(v).iter().filter(|&&u| member[u]).count() as u64;
        if !rule.open && member[v] {
            achieved += 1;
        }
        if achieved < required {
            deficiencies.push(Deficiency { vertex: v, required, achieved });
        }
    }
    let weight = member.iter().filter(|&&b| b).count() as u64;
    Ok(VerifyReport::new(weight, deficiencies))
}

/// Checks a vertex function against `bracek`, `rs` or `totalrs`.
///
/// The function's caps must equal the specification's r-vector; a value
/// above its cap is reported as [`Error::CapViolation`], not as a deficiency.
pub fn verify_function(g: &Graph, spec: &DominationSpec, f: &VertexFunction) -> Result<VerifyReport> {
    let rule = spec
        .function_rule(g.n())
        .ok_or_else(|| Error::WrongSpecKind(format!("`{spec}` is a set variant; use verify_set")))?;
    spec.check_feasible(g)?;
    if f.values.len() != g.n() || f.caps.len() != g.n() {
        return Err(Error::CapsMismatch(format!(
            "function has {} values and {} caps on a graph of order {}",
            f.values.len(),
            f.caps.len(),
            g.n()
        )));
    }
    if f.caps != rule.caps {
        return Err(Error::CapsMismatch(format!("caps differ from the r-vector of `{spec}`")));
    }
    if let Some(v) = g.vertices().find(|&v| f.values[v] > f.caps[v]) {
        return Err(Error::CapViolation { vertex: v, value: f.values[v], cap: f.caps[v] });
    }
    let deficiencies = neighborhood_deficiencies(g, &f.values, &rule.demands, rule.open);
    Ok(VerifyReport::new(weight(f), deficiencies))
}

/// Vertices whose (open or closed) neighbourhood sum of `values` falls short of `demands`.
pub(crate) fn neighborhood_deficiencies(g: &Graph, values: &[u32], demands: &[u32], open: bool) -> Vec<Deficiency> {
    g.vertices()
        .filter_map(|v| {
            let mut achieved: u64 = g.neighbors(v).iter().map(|&u| values[u] as u64).sum();
            if !open {
                achieved += values[v] as u64;
            }
            let required = demands[v] as u64;
            (achieved < required).then_some(Deficiency { vertex: v, required, achieved })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily, GraphFamilySpec};

    fn c4() -> Graph {
        generate(&GraphFamilySpec::new(GraphFamily::Cycle { n: 4 }, 0)).unwrap()
    }

    fn all_subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn classical_on_c4() {
        let r = verify_set(&c4(), &DominationSpec::Classical, &[0, 2]).unwrap();
        assert!(r.valid);
        assert_eq!(r.weight, 2);
    }

    #[test]
    fn double_domination_on_c4() {
        let g = c4();
        let spec = DominationSpec::KTuple { k: 2 };
        let r = verify_set(&g, &spec, &[0, 1]).unwrap();
        assert!(!r.valid);
        assert!(r.deficiencies.contains(&Deficiency { vertex: 2, required: 2, achieved: 1 }));
        // brute force: no 2-subset of C_4 is 2-tuple dominating
        for set in all_subsets_of_size(4, 2) {
            assert!(!verify_set(&g, &spec, &set).unwrap().valid, "{set:?}");
        }
    }

    #[test]
    fn parametric_one_two_is_total_domination() {
        let g = c4();
        assert!(verify_set(&g, &DominationSpec::Parametric { k: 1, l: 2 }, &[0, 1]).unwrap().valid);
        assert!(verify_set(&g, &DominationSpec::TotalK { k: 1 }, &[0, 1]).unwrap().valid);
        assert!(!verify_set(&g, &DominationSpec::TotalK { k: 1 }, &[0, 2]).unwrap().valid);
    }

    #[test]
    fn set_errors() {
        let g = c4();
        assert!(matches!(verify_set(&g, &DominationSpec::BraceK { k: 2 }, &[0]), Err(Error::WrongSpecKind(_))));
        assert!(verify_set(&g, &DominationSpec::TotalK { k: 3 }, &[0]).unwrap_err().is_infeasible());
        assert!(matches!(
            verify_set(&g, &DominationSpec::Classical, &[7]),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn brace_two_on_c4() {
        let g = c4();
        let spec = DominationSpec::BraceK { k: 2 };
        let f = VertexFunction::new(vec![1, 1, 1, 0], vec![2; 4]);
        let r = verify_function(&g, &spec, &f).unwrap();
        assert!(r.valid);
        assert_eq!(r.weight, 3);

        let f = VertexFunction::new(vec![2, 0, 0, 0], vec![2; 4]);
        let r = verify_function(&g, &spec, &f).unwrap();
        assert!(!r.valid);
        assert_eq!(r.deficiencies, vec![Deficiency { vertex: 2, required: 2, achieved: 0 }]);

        // exhaustive: minimum weight of a {2}-dominating function on C_4 is 3
        let mut best = u64::MAX;
        for code in 0..3u32.pow(4) {
            let values: Vec<u32> = (0..4).map(|i| code / 3u32.pow(i) % 3).collect();
            let f = VertexFunction::new(values, vec![2; 4]);
            if verify_function(&g, &spec, &f).unwrap().valid {
                best = best.min(f.weight());
            }
        }
        assert_eq!(best, 3);
    }

    #[test]
    fn function_errors() {
        let g = c4();
        let spec = DominationSpec::BraceK { k: 2 };
        let f = VertexFunction::new(vec![3, 0, 0, 0], vec![2; 4]);
        assert!(matches!(verify_function(&g, &spec, &f), Err(Error::CapViolation { vertex: 0, value: 3, cap: 2 })));
        let f = VertexFunction::new(vec![1, 1, 1, 1], vec![1; 4]);
        assert!(matches!(verify_function(&g, &spec, &f), Err(Error::CapsMismatch(_))));
        assert!(matches!(verify_function(&g, &DominationSpec::Classical, &f), Err(Error::WrongSpecKind(_))));
    }

    #[test]
    fn unit_rs_matches_classical() {
        let g = generate(&GraphFamilySpec::new(GraphFamily::Gnp { n: 8, p: 0.35 }, 5)).unwrap();
        let rs = DominationSpec::Rs { r: vec![1; 8], s: vec![1; 8] };
        for mask in 0u32..256 {
            let set: Vec<usize> = (0..8).filter(|&i| mask >> i & 1 == 1).collect();
            let by_set = verify_set(&g, &DominationSpec::Classical, &set).unwrap().valid;
            let by_fn = verify_function(&g, &rs, &VertexFunction::indicator(8, &set)).unwrap().valid;
            assert_eq!(by_set, by_fn, "{set:?}");
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&VertexFunction::new(vec![0; 5], vec![1; 5])), 0);
        assert_eq!(weight(&VertexFunction::new(vec![1, 2, 0], vec![2; 3])), 3);
        assert_eq!(VertexFunction::indicator(6, &[1, 4, 5]).weight(), 3);
    }

    #[test]
    fn whole_vertex_set_is_parametric_dominating() {
        let g = generate(&GraphFamilySpec::new(GraphFamily::RandomRegular { n: 12, d: 4 }, 3)).unwrap();
        let all: Vec<usize> = g.vertices().collect();
        for k in 1..=4 {
            for l in 1..=5 {
                let r = verify_set(&g, &DominationSpec::Parametric { k, l }, &all).unwrap();
                assert!(r.valid, "k={k} l={l}");
            }
        }
    }
}
