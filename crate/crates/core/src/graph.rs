//! Bitset graphs on at most 64 vertices.
//!
//! Vertices are 0-based internally. Text surfaces (edge lists, JSON reports,
//! the CLI) use 1-based labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of vertices as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VertexSet {
        VertexSet(indices.into_iter().fold(0u64, |acc, v| {
            assert!(v < MAX_ORDER, "vertex index {v} exceeds word width");
            acc | (1 << v)
        }))
    }

    /// Builds a set from 1-based labels; fails on label 0 or labels beyond 64.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<VertexSet, GraphError> {
        let mut bits = 0u64;
        for label in labels {
            if label == 0 || label > MAX_ORDER {
                return Err(GraphError::VertexOutOfRange {
                    vertex: label,
                    n: MAX_ORDER,
                });
            }
            bits |= 1 << (label - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }

    /// Ascending 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// Image under `i -> (i + shift) mod n`.
    pub fn rotate(self, shift: usize, n: usize) -> VertexSet {
        VertexSet::from_indices(self.iter().map(|v| (v + shift) % n))
    }

    pub fn fits(self, n: usize) -> bool {
        self.0 & !full_mask(n) == 0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.labels().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{l}")?;
        }
        write!(f, "}}")
    }
}

/// An undirected edge stored with `u < v` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn labels(self) -> [usize; 2] {
        [self.0 + 1, self.1 + 1]
    }
}

/// Simple undirected graph with one adjacency word per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n, 1));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            let w = (v + 1) % n;
            if v != w {
                g.add_edge(v, w)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10).expect("order 10");
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n, 1));
        }
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(GraphError::SetOutOfRange { n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for w in VertexSet(row).iter() {
                if adj[w] >> v & 1 == 0 {
                    return Err(GraphError::EdgeNotPresent(w, v));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Inserts `uv`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.fits(self.n) {
            Ok(())
        } else {
            Err(GraphError::SetOutOfRange { n: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(full_mask(self.n))
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !full_mask(u + 1)).iter() {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|v| self.adj[v] | (1 << v) == all)
    }

    /// Number of connected components of `G - removed`; 0 when nothing remains.
    pub fn components(&self, removed: VertexSet) -> Result<usize, GraphError> {
        self.check_set(removed)?;
        Ok(self.count_components(removed.0))
    }

    /// Unchecked component count for hot loops; `removed` must fit the graph.
    #[inline]
    pub fn count_components(&self, removed: u64) -> usize {
        let mut left = full_mask(self.n) & !removed;
        let mut count = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut reach = 0u64;
                let mut f = frontier;
                while f != 0 {
                    reach |= self.adj[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = reach & left & !comp;
                comp |= frontier;
            }
            left &= !comp;
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.count_components(0) == 1
    }

    /// Copy of the graph with `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeNotPresent(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let (min, max) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        DegreeProfile {
            min,
            max,
            regular: min == max,
        }
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for e in self.edges() {
            let (a, b) = (perm[e.0], perm[e.1]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().into_iter().map(Edge::labels).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}

/// Recipe for the circulant graph `C(n; D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    n: usize,
    distances: Vec<usize>,
}

impl CirculantSpec {
    /// Validates and normalizes (sorts, dedups) the distance list.
    pub fn new(n: usize, distances: &[usize]) -> Result<CirculantSpec, GraphError> {
        if !(3..=MAX_ORDER).contains(&n) {
            return Err(GraphError::OrderOutOfRange(n, 3));
        }
        if distances.is_empty() {
            return Err(GraphError::NoDistances);
        }
        let mut ds = distances.to_vec();
        ds.sort_unstable();
        ds.dedup();
        if let Some(&bad) = ds.iter().find(|&&d| d == 0 || d > n / 2) {
            return Err(GraphError::DistanceOutOfRange { distance: bad, n });
        }
        Ok(CirculantSpec { n, distances: ds })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &[usize] {
        &self.distances
    }

    /// Degree of every vertex: 2 per distance, 1 for the antipodal distance `n/2`.
    pub fn degree(&self) -> usize {
        self.distances
            .iter()
            .map(|&d| if 2 * d == self.n { 1 } else { 2 })
            .sum()
    }
}

/// Vertex `i` is joined to `i ± d (mod n)` for every listed distance.
pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let mut adj = vec![0u64; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for &d in &spec.distances {
            *row |= 1 << ((i + d) % n);
            *row |= 1 << ((i + n - d) % n);
        }
    }
    Graph { n, adj }
}

/// Cyclic distance `min(|u - v|, n - |u - v|)`.
pub fn cyclic_distance(u: usize, v: usize, n: usize) -> usize {
    let d = u.abs_diff(v) % n;
    d.min(n - d)
}
