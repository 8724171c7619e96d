//! Undirected simple graphs with sorted adjacency lists.

mod generate;
mod io;

pub use generate::{generate, GraphFamily, GraphFamilySpec};
pub use io::{read_graph, write_graph, GraphFormat};

use crate::error::{Error, Result};

/// Immutable undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending and symmetric. Minimum and maximum
/// degree are computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
    min_degree: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        let min_degree = adjacency.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Self { adjacency, m: degree_sum / 2, min_degree, max_degree }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Minimum degree δ.
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    /// Maximum degree Δ.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted open neighbourhood of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// N[v] = N(v) ∪ {v}, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let list = &self.adjacency[v];
        let pos = list.partition_point(|&u| u < v);
        let mut out = Vec::with_capacity(list.len() + 1);
        out.extend_from_slice(&list[..pos]);
        out.push(v);
        out.extend_from_slice(&list[pos..]);
        Ok(out)
    }

    /// Restricted neighbourhood: the δ lowest-indexed neighbours of `v`,
    /// plus `v` itself when `closed`. The result is sorted.
    pub fn restricted_neighborhood(&self, v: usize, closed: bool) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self.adjacency[v][..self.min_degree].to_vec();
        if closed {
            let pos = out.partition_point(|&u| u < v);
            out.insert(pos, v);
        }
        Ok(out)
    }

    /// Restricted neighbourhoods of every vertex.
    pub fn restricted_neighborhoods(&self, closed: bool) -> Vec<Vec<usize>> {
        self.vertices().map(|v| self.restricted_neighborhood(v, closed).expect("vertex in range")).collect()
    }
}
