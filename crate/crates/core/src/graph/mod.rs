//! Immutable simple graphs with a precomputed distance matrix.
//!
//! Every metric query used by the transport and checking code goes through
//! [`Graph::dist`], which is a table lookup. Construction runs one BFS per
//! vertex and rejects disconnected input.

mod io;

use std::collections::VecDeque;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use io::{parse_edge_list, parse_json_graph, read_graph, write_edge_list, GraphJson};

/// Vertex ids are dense `0..n`.
pub type Vertex = usize;

/// Sorted set of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Sorts and deduplicates.
    pub fn from_unsorted(mut v: Vec<Vertex>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl Deref for VertexSet {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// In-, spherical- and out-degree of a vertex relative to a reference vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectionalDegrees {
    pub d_minus: usize,
    pub d_zero: usize,
    pub d_plus: usize,
}

impl DirectionalDegrees {
    pub fn total(&self) -> usize {
        self.d_minus + self.d_zero + self.d_plus
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    dist: Vec<u32>,
    diameter: u32,
}

impl Graph {
    /// Builds a connected simple graph on `n` vertices.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }

        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in &adjacency[u] {
                    if row[w] == u32::MAX {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
            if let Some(t) = row.iter().position(|&d| d == u32::MAX) {
                return Err(GraphError::Disconnected(s, t));
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0);
        Ok(Graph { adjacency, dist, diameter })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn dist(&self, x: Vertex, y: Vertex) -> u32 {
        self.dist[x * self.vertex_count() + y]
    }

    #[inline]
    pub fn adjacent(&self, x: Vertex, y: Vertex) -> bool {
        self.dist(x, y) == 1
    }

    /// `x ~ y` or `x == y`.
    #[inline]
    pub fn adjacent_or_equal(&self, x: Vertex, y: Vertex) -> bool {
        self.dist(x, y) <= 1
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// `Some(D)` when every vertex has degree `D`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|n| n.len() == d).then_some(d)
    }

    pub fn sphere(&self, x: Vertex, k: u32) -> VertexSet {
        VertexSet(self.vertices().filter(|&v| self.dist(x, v) == k).collect())
    }

    pub fn ball(&self, x: Vertex, k: u32) -> VertexSet {
        VertexSet(self.vertices().filter(|&v| self.dist(x, v) <= k).collect())
    }

    /// All vertices on some geodesic from `x` to `y`.
    pub fn interval(&self, x: Vertex, y: Vertex) -> VertexSet {
        let d = self.dist(x, y);
        VertexSet(self.vertices().filter(|&v| self.dist(x, v) + self.dist(v, y) == d).collect())
    }

    pub fn directional_degrees(&self, x0: Vertex, y: Vertex) -> DirectionalDegrees {
        let k = self.dist(x0, y);
        let mut dd = DirectionalDegrees { d_minus: 0, d_zero: 0, d_plus: 0 };
        for &v in self.neighbors(y) {
            let dv = self.dist(x0, v);
            if dv + 1 == k {
                dd.d_minus += 1;
            } else if dv == k {
                dd.d_zero += 1;
            } else {
                dd.d_plus += 1;
            }
        }
        dd
    }

    /// Vertices adjacent to both `x` and `y`.
    pub fn common_neighbors(&self, x: Vertex, y: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let other = &self.adjacency[y];
        self.adjacency[x].iter().copied().filter(move |v| other.binary_search(v).is_ok())
    }

    /// Number of triangles through the edge `x ~ y`.
    pub fn triangle_count_edge(&self, x: Vertex, y: Vertex) -> Result<usize, GraphError> {
        if !self.adjacent(x, y) {
            return Err(GraphError::NotAnEdge(x, y));
        }
        Ok(self.common_neighbors(x, y).count())
    }

    /// Vertices with at least one partner at distance `diameter`.
    pub fn is_pole(&self, x: Vertex) -> bool {
        self.vertices().any(|v| self.dist(x, v) == self.diameter)
    }
}
