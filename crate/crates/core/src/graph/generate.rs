use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Graph families available to the generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphFamily {
    /// Erdős–Rényi G(n, p).
    Gnp {
        n: usize,
        p: f64,
    },
    /// Uniform-ish random d-regular graph (Steger–Wormald pairing).
    RandomRegular {
        n: usize,
        d: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// K_{a,b}; part `0..a` and part `a..a+b`.
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Petersen,
}

/// A family together with the seed that drives it. Equal specs give equal graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFamilySpec {
    #[serde(flatten)]
    pub family: GraphFamily,
    pub seed: u64,
}

impl GraphFamilySpec {
    pub fn new(family: GraphFamily, seed: u64) -> Self {
        Self { family, seed }
    }
}

pub fn generate(spec: &GraphFamilySpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        GraphFamily::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidFamily(format!("edge probability {p} not in [0,1]")));
            }
            require_order(n, 1)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        GraphFamily::RandomRegular { n, d } => random_regular(n, d, &mut rng),
        GraphFamily::Path { n } => {
            require_order(n, 1)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        GraphFamily::Cycle { n } => {
            require_order(n, 3)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphFamily::Complete { n } => {
            require_order(n, 1)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphFamily::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(Error::InvalidFamily("both parts of K_{a,b} must be non-empty".into()));
            }
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        GraphFamily::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
    }
}

fn require_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidFamily(format!("order {n} below minimum {min}")))
    } else {
        Ok(())
    }
}

const REGULAR_RESTARTS: usize = 1000;

fn random_regular(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    require_order(n, 1)?;
    if d >= n {
        return Err(Error::InvalidFamily(format!("degree {d} must be below order {n}")));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::InvalidFamily(format!("n*d = {} must be even", n * d)));
    }
    for _ in 0..REGULAR_RESTARTS {
        if let Some(edges) = try_pairing(n, d, rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(Error::InvalidFamily(format!("no {d}-regular graph on {n} vertices found after {REGULAR_RESTARTS} restarts")))
}

/// One Steger–Wormald pass: repeatedly join two random free points whose
/// vertices are distinct and not yet adjacent. Returns `None` when stuck.
fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    points.shuffle(rng);
    let mut adjacent = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(n * d / 2);
    while !points.is_empty() {
        let len = points.len();
        let mut joined = false;
        for _ in 0..(4 * len).max(32) {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            let (u, v) = (points[i], points[j]);
            if i != j && u != v && !adjacent[u][v] {
                adjacent[u][v] = true;
                adjacent[v][u] = true;
                edges.push((u, v));
                let (hi, lo) = (i.max(j), i.min(j));
                points.swap_remove(hi);
                points.swap_remove(lo);
                joined = true;
                break;
            }
        }
        if !joined {
            // exhaustive check before giving up on this pass
            let suitable = (0..len).find_map(|i| {
                (i + 1..len).find(|&j| points[i] != points[j] && !adjacent[points[i]][points[j]]).map(|j| (i, j))
            });
            let (i, j) = suitable?;
            let (u, v) = (points[i], points[j]);
            adjacent[u][v] = true;
            adjacent[v][u] = true;
            edges.push((u, v));
            points.swap_remove(j);
            points.swap_remove(i);
        }
    }
    Some(edges)
}
