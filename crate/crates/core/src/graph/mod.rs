//! Finite simple graphs, permutations and automorphism search.

mod perm;
mod search;

pub use perm::Permutation;
pub use search::{
    are_disjoint, automorphisms, automorphisms_with, find_disjoint_pair, find_disjoint_pair_with,
    is_automorphism,
};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph with a dense adjacency matrix.
///
/// Loops and repeated edges are rejected on construction; isolated vertices
/// and disconnected graphs are fine.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

/// Wire format: `{"n": 4, "edges": [[0, 1], ...]}`, 0-based endpoints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::from_edges(j.n, &j.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[[usize; 2]]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("graph must have at least one vertex".into()));
        }
        let mut adj = vec![false; n * n];
        for &[i, j] in edges {
            if i >= n || j >= n {
                return Err(Error::Parse(format!(
                    "edge [{i}, {j}] has an endpoint outside 0..{n}"
                )));
            }
            if i == j {
                return Err(Error::Parse(format!("loop at vertex {i}")));
            }
            if adj[i * n + j] {
                return Err(Error::Parse(format!("repeated edge [{i}, {j}]")));
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(Self::from_dense(n, adj))
    }

    /// Builds a graph from a predicate that must be symmetric and false on
    /// the diagonal.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("graph must have at least one vertex".into()));
        }
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = adjacent(i, j);
            }
        }
        for i in 0..n {
            if adj[i * n + i] {
                return Err(Error::Parse(format!("loop at vertex {i}")));
            }
            for j in 0..i {
                if adj[i * n + j] != adj[j * n + i] {
                    return Err(Error::Parse(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self::from_dense(n, adj))
    }

    fn from_dense(n: usize, adj: Vec<bool>) -> Self {
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| adj[i * n + j]).collect())
            .collect();
        Graph { n, adj, neighbors }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| i != j)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::usage("a cycle needs at least 3 vertices"));
        }
        Self::from_fn(n, |i, j| (i + 1) % n == j || (j + 1) % n == i)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    /// Edges `[i, j]` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for &j in &self.neighbors[i] {
                if i < j {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    pub fn n_edges(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|i| self.degree(i) == d).then_some(d)
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(
            self.n,
            self.n,
            |i, j| {
                if self.adjacent(i, j) {
                    1.0
                } else {
                    0.0
                }
            },
        )
    }

    /// `ε·x` using the neighbor lists.
    pub fn apply_adjacency<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Copy + std::iter::Sum<T>,
    {
        self.neighbors
            .iter()
            .map(|nb| nb.iter().map(|&j| x[j]).sum())
            .collect()
    }

    /// Relabels vertices: vertex `i` of `self` becomes vertex `p(i)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::dimension(self.n, p.len()));
        }
        let inv = p.inverse();
        Graph::from_fn(self.n, |i, j| self.adjacent(inv.apply(i), inv.apply(j)))
    }

    /// Vertex invariant used to order and prune the automorphism search:
    /// degree, then the sorted degrees of the neighbours.
    pub(crate) fn vertex_invariant(&self, i: usize) -> (usize, Vec<usize>) {
        let mut nd: Vec<usize> = self.neighbors[i].iter().map(|&j| self.degree(j)).collect();
        nd.sort_unstable();
        (self.degree(i), nd)
    }
}
