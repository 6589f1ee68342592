//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Each vertex stores its neighborhood as a single `u64` bitmask. Vertices are
//! indexed from 0; the 1-based `v_i` naming only shows up in the `F_k` generator
//! documentation.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} is outside [1, {MAX_ORDER}]")]
    OrderOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("family `{family}` needs size parameter >= {min}, got {got}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        let mut adj = vec![0u64; order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { order, adj })
    }

    /// Edgeless graph `nK_1`.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::from_edges(order, &[])
    }

    /// Builds directly from neighbor masks. Callers inside the crate guarantee
    /// symmetry and irreflexivity.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m & bit(v) == 0
            && m & !low_mask(adj.len()) == 0
            && Bits(m).all(|u| adj[u] & bit(v) != 0)));
        Graph {
            order: adj.len(),
            adj,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighborhood of `v` as ascending vertex indices.
    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        Bits(self.adj[v]).collect()
    }

    /// Mask with every vertex of the graph set.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 whenever an isolated vertex exists.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&m| m != 0)
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(|&m| m == 0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.order)
            .map(|v| !self.adj[v] & all & !bit(v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length must equal order");
        let mut adj = vec![0u64; self.order];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Subgraph check under the identity vertex map: every edge of `self` is an
    /// edge of `host`.
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.order <= host.order
            && (0..self.order).all(|v| self.adj[v] & !host.adj[v] == 0)
    }

    pub fn generate(family: Family, size: usize) -> Result<Graph, GraphError> {
        let min = family.min_size();
        if size < min {
            return Err(GraphError::FamilyTooSmall {
                family: family.name(),
                min,
                got: size,
            });
        }
        if size > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(size));
        }
        let n = size;
        let edges: Vec<(usize, usize)> = match family {
            Family::Complete => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Family::Empty => Vec::new(),
            Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
            Family::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            Family::Star => (1..n).map(|v| (0, v)).collect(),
            Family::Fk => {
                // 1-based v_i ~ v_j (i < j) iff i + j <= k + 1
                let mut edges = Vec::new();
                for i in 1..=n / 2 {
                    for j in (i + 1)..=(n + 1 - i) {
                        edges.push((i - 1, j - 1));
                    }
                }
                edges
            }
        };
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Named graph families for [`Graph::generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    /// `K_{1, n-1}` with center 0.
    Star,
    Empty,
    /// `F_k` on `v_1..v_k` (indices `0..k`), where `v_i ~ v_j` for `i < j`
    /// exactly when `i + j <= k + 1`. It has `floor(k^2 / 4)` edges and
    /// `F_k` sits inside `F_{k+1}` under the identity map.
    Fk,
}

impl Family {
    pub fn min_size(self) -> usize {
        match self {
            Family::Complete | Family::Empty => 1,
            Family::Cycle => 3,
            Family::Path | Family::Star | Family::Fk => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Empty => "empty",
            Family::Fk => "fk",
        }
    }
}

/// Closed-form `F_k` adjacency for 1-based positions.
#[inline]
pub fn fk_adjacent(k: usize, i: usize, j: usize) -> bool {
    i != j && i + j <= k + 1
}

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |m, v| m | bit(v)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True when every member is a vertex of a graph with this order.
    pub fn fits(self, order: usize) -> bool {
        self.0 & !low_mask(order) == 0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
