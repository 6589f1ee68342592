//! Domination, independence, vertex cover, matching and edge cover numbers.
//!
//! All solvers are exact branch-and-bound searches over `u64` vertex masks.
//! Among optimal witnesses the lexicographically smallest sorted vertex (or edge)
//! sequence is returned.
//!
//! [`brute_invariant`] is a separate subset-enumeration oracle.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, low_mask, Bits, Graph, VertexSet};

/// Largest order accepted by the exact solvers.
pub const SOLVER_CAP: usize = 32;
/// Largest order accepted by the brute-force oracle for vertex parameters.
pub const ORACLE_VERTEX_CAP: usize = 20;
/// Largest edge count accepted by the brute-force oracle for edge parameters.
pub const ORACLE_EDGE_CAP: usize = 20;

pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("order {order} exceeds the exact solver cap of {SOLVER_CAP}")]
    Capacity { order: usize },
    #[error("oracle cap exceeded for {param}: size {size} > {cap}")]
    OracleCapacity {
        param: Param,
        size: usize,
        cap: usize,
    },
    #[error("vertex {0} is isolated, so no edge cover exists")]
    IsolatedVertex(usize),
}

/// Parameter tags shared by the oracle and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Gamma,
    Alpha,
    Alpha1,
    Beta,
    Beta1,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::Gamma, Param::Alpha, Param::Alpha1, Param::Beta, Param::Beta1];

    pub fn is_edge_param(self) -> bool {
        matches!(self, Param::Alpha1 | Param::Beta1)
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Param::Gamma => "gamma",
            Param::Alpha => "alpha",
            Param::Alpha1 => "alpha1",
            Param::Beta => "beta",
            Param::Beta1 => "beta1",
        };
        f.write_str(s)
    }
}

fn check_cap(g: &Graph) -> Result<(), InvariantError> {
    if g.order() > SOLVER_CAP {
        Err(InvariantError::Capacity { order: g.order() })
    } else {
        Ok(())
    }
}

/// Vertices strictly greater than `v`.
#[inline]
fn above(v: usize) -> u64 {
    !low_mask(v + 1)
}

// ---------------------------------------------------------------------------
// independence
// ---------------------------------------------------------------------------

struct MisSearch<'a> {
    adj: &'a [u64],
    best: usize,
}

impl MisSearch<'_> {
    fn greedy(adj: &[u64], mut cand: u64) -> usize {
        let mut size = 0;
        while cand != 0 {
            let v = Bits(cand)
                .min_by_key(|&v| (adj[v] & cand).count_ones())
                .unwrap();
            cand &= !(adj[v] | bit(v));
            size += 1;
        }
        size
    }

    fn search(&mut self, mut cand: u64, mut size: usize) {
        // vertices of degree <= 1 inside `cand` are always safe to take
        loop {
            let mut changed = false;
            for v in Bits(cand) {
                if cand & bit(v) != 0 && (self.adj[v] & cand).count_ones() <= 1 {
                    cand &= !(self.adj[v] | bit(v));
                    size += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if cand == 0 {
            self.best = self.best.max(size);
            return;
        }
        if size + cand.count_ones() as usize <= self.best {
            return;
        }
        let v = Bits(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        self.search(cand & !(self.adj[v] | bit(v)), size + 1);
        self.search(cand & !bit(v), size);
    }
}

/// Size of a maximum independent set of the subgraph induced by `cand`.
fn mis_size(adj: &[u64], cand: u64) -> usize {
    let mut s = MisSearch {
        adj,
        best: MisSearch::greedy(adj, cand),
    };
    s.search(cand, 0);
    s.best
}

/// Largest independent set containing `forced` and avoiding `forbidden`, or
/// `None` when `forced` itself is not independent.
fn mis_with(adj: &[u64], all: u64, forced: u64, forbidden: u64) -> Option<usize> {
    let closed: u64 = Bits(forced).fold(0, |m, v| m | adj[v]);
    if closed & forced != 0 {
        return None;
    }
    let rest = all & !forced & !forbidden & !closed;
    Some(forced.count_ones() as usize + mis_size(adj, rest))
}

/// Independence number `beta(G)` with the lexicographically smallest maximum
/// independent set.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    check_cap(g)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbors(v)).collect();
    let all = g.vertex_mask();
    let beta = mis_size(&adj, all);
    let (mut chosen, mut cand) = (0u64, all);
    while (chosen.count_ones() as usize) < beta {
        let need = beta - chosen.count_ones() as usize;
        let v = Bits(cand)
            .find(|&v| 1 + mis_size(&adj, cand & !adj[v] & above(v)) >= need)
            .expect("a maximum independent set extends the current prefix");
        chosen |= bit(v);
        cand &= !adj[v] & above(v);
    }
    Ok((beta, VertexSet::from_mask(chosen)))
}

/// Vertex cover number `alpha(G) = n - beta(G)`; the witness is the
/// lexicographically smallest minimum cover, i.e. the complement of some
/// maximum independent set.
pub fn vertex_cover_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    check_cap(g)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbors(v)).collect();
    let all = g.vertex_mask();
    let beta = mis_size(&adj, all);
    let alpha = g.order() - beta;
    // scan ascending: put v in the cover whenever a maximum independent set
    // avoiding the cover so far still exists
    let (mut cover, mut outside) = (0u64, 0u64);
    for v in 0..g.order() {
        if cover.count_ones() as usize == alpha {
            outside |= bit(v);
            continue;
        }
        let with_v = cover | bit(v);
        if mis_with(&adj, all, outside, with_v).is_some_and(|s| s >= beta) {
            cover = with_v;
        } else {
            outside |= bit(v);
        }
    }
    debug_assert_eq!(cover.count_ones() as usize, alpha);
    Ok((alpha, VertexSet::from_mask(cover)))
}

// ---------------------------------------------------------------------------
// domination
// ---------------------------------------------------------------------------

struct DomSearch<'a> {
    closed: &'a [u64],
    /// exclusive bound: only solutions smaller than this are of interest
    limit: usize,
    found: Option<usize>,
}

impl DomSearch<'_> {
    fn search(&mut self, undominated: u64, allowed: u64, size: usize) {
        if undominated == 0 {
            if size < self.limit {
                self.limit = size;
                self.found = Some(size);
            }
            return;
        }
        if size + 1 >= self.limit {
            return;
        }
        let max_cover = Bits(allowed)
            .map(|w| (self.closed[w] & undominated).count_ones() as usize)
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return;
        }
        let remaining = undominated.count_ones() as usize;
        if size + remaining.div_ceil(max_cover) >= self.limit {
            return;
        }
        // branch on the undominated vertex with the fewest possible dominators
        let u = Bits(undominated)
            .min_by_key(|&u| (self.closed[u] & allowed).count_ones())
            .unwrap();
        let mut options: Vec<usize> = Bits(self.closed[u] & allowed).collect();
        if options.is_empty() {
            return;
        }
        options.sort_by_key(|&w| std::cmp::Reverse((self.closed[w] & undominated).count_ones()));
        let mut allowed = allowed;
        for w in options {
            self.search(undominated & !self.closed[w], allowed & !bit(w), size + 1);
            allowed &= !bit(w);
        }
    }
}

fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v) | bit(v)).collect()
}

/// Minimum number of `allowed` vertices dominating `undominated`, if below `limit`.
fn min_dominators(closed: &[u64], undominated: u64, allowed: u64, limit: usize) -> Option<usize> {
    let mut s = DomSearch {
        closed,
        limit,
        found: None,
    };
    s.search(undominated, allowed, 0);
    s.found
}

/// Domination number `gamma(G)` with the lexicographically smallest minimum
/// dominating set. Isolated vertices always belong to the set.
pub fn domination_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    check_cap(g)?;
    let closed = closed_neighborhoods(g);
    let all = g.vertex_mask();
    let gamma = min_dominators(&closed, all, all, g.order() + 1).expect("V dominates itself");
    let (mut chosen, mut dominated, mut allowed) = (0u64, 0u64, all);
    for v in 0..g.order() {
        let taken = chosen.count_ones() as usize;
        if taken == gamma {
            break;
        }
        let undom = all & !(dominated | closed[v]);
        let rest_allowed = allowed & above(v);
        let ok = undom == 0 || min_dominators(&closed, undom, rest_allowed, gamma - taken).is_some();
        if ok {
            chosen |= bit(v);
            dominated |= closed[v];
        }
        allowed &= !bit(v);
    }
    debug_assert_eq!(dominated, all);
    Ok((gamma, VertexSet::from_mask(chosen)))
}

// ---------------------------------------------------------------------------
// matching and edge cover
// ---------------------------------------------------------------------------

struct MatchSearch<'a> {
    adj: &'a [u64],
    current: Vec<Edge>,
    best: Vec<Edge>,
}

impl MatchSearch<'_> {
    fn search(&mut self, free: u64) {
        // vertices that still have a free neighbor
        let live: u64 = Bits(free).filter(|&v| self.adj[v] & free != 0).fold(0, |m, v| m | bit(v));
        if self.current.len() + (live.count_ones() as usize) / 2 <= self.best.len() {
            if live == 0 && self.best.is_empty() && self.current.is_empty() {
                // nothing to match at all
            }
            return;
        }
        let u = live.trailing_zeros() as usize;
        for v in Bits(self.adj[u] & free) {
            self.current.push((u, v));
            let rest = free & !bit(u) & !bit(v);
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.search(rest);
            self.current.pop();
        }
        self.search(free & !bit(u));
    }
}

/// Matching number `beta1(G)` with the lexicographically smallest maximum matching.
pub fn matching_number(g: &Graph) -> Result<(usize, Vec<Edge>), InvariantError> {
    check_cap(g)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbors(v)).collect();
    let mut s = MatchSearch {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    s.search(g.vertex_mask());
    Ok((s.best.len(), s.best))
}

/// Edge cover number `alpha1(G) = n - beta1(G)`, defined only without isolated
/// vertices. The witness is a maximum matching plus, for every unmatched vertex,
/// the edge to its smallest neighbor.
pub fn edge_cover_number(g: &Graph) -> Result<(usize, Vec<Edge>), InvariantError> {
    check_cap(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(InvariantError::IsolatedVertex(v));
    }
    let (beta1, matching) = matching_number(g)?;
    let matched: u64 = matching.iter().fold(0, |m, &(u, v)| m | bit(u) | bit(v));
    let mut cover = matching;
    for v in Bits(g.vertex_mask() & !matched) {
        let w = g.neighbors(v).trailing_zeros() as usize;
        cover.push((v.min(w), v.max(w)));
    }
    cover.sort_unstable();
    debug_assert_eq!(cover.len(), g.order() - beta1);
    Ok((g.order() - beta1, cover))
}

// ---------------------------------------------------------------------------
// feasibility checks
// ---------------------------------------------------------------------------

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    s.fits(g.order())
        && (0..g.order()).all(|v| s.contains(v) || g.neighbors(v) & s.mask() != 0)
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.fits(g.order()) && s.iter().all(|v| g.neighbors(v) & s.mask() == 0)
}

pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> bool {
    s.fits(g.order()) && g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
}

pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut used = 0u64;
    for &(u, v) in edges {
        if !g.has_edge(u, v) || used & (bit(u) | bit(v)) != 0 {
            return false;
        }
        used |= bit(u) | bit(v);
    }
    true
}

pub fn is_edge_cover(g: &Graph, edges: &[Edge]) -> bool {
    let covered = edges.iter().try_fold(0u64, |m, &(u, v)| {
        g.has_edge(u, v).then_some(m | bit(u) | bit(v))
    });
    covered == Some(g.vertex_mask())
}

// ---------------------------------------------------------------------------
// bundle
// ---------------------------------------------------------------------------

/// Covering, domination and independence values of one graph with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub order: usize,
    pub delta: usize,
    pub gamma: usize,
    pub alpha: usize,
    /// Absent when the graph has an isolated vertex.
    pub alpha1: Option<usize>,
    pub beta: usize,
    pub beta1: usize,
    pub dominating_set: VertexSet,
    pub vertex_cover: VertexSet,
    pub independent_set: VertexSet,
    pub matching: Vec<Edge>,
    pub edge_cover: Option<Vec<Edge>>,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        let (gamma, dominating_set) = domination_number(g)?;
        let (alpha, vertex_cover) = vertex_cover_number(g)?;
        let (beta, independent_set) = independence_number(g)?;
        let (beta1, matching) = matching_number(g)?;
        let (alpha1, edge_cover) = match edge_cover_number(g) {
            Ok((a, c)) => (Some(a), Some(c)),
            Err(InvariantError::IsolatedVertex(_)) => (None, None),
            Err(e) => return Err(e),
        };
        Ok(InvariantBundle {
            order: g.order(),
            delta: g.min_degree(),
            gamma,
            alpha,
            alpha1,
            beta,
            beta1,
            dominating_set,
            vertex_cover,
            independent_set,
            matching,
            edge_cover,
        })
    }

    /// `min{alpha, alpha1, beta, beta1}`; requires an edge cover to exist.
    pub fn min_cover_independence(&self) -> Option<usize> {
        self.alpha1
            .map(|a1| a1.min(self.alpha).min(self.beta).min(self.beta1))
    }

    /// Re-checks every witness against its definition and cardinality.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("{what} witness invalid")) };
        check(is_dominating(g, self.dominating_set) && self.dominating_set.len() == self.gamma, "gamma")?;
        check(is_vertex_cover(g, self.vertex_cover) && self.vertex_cover.len() == self.alpha, "alpha")?;
        check(is_independent(g, self.independent_set) && self.independent_set.len() == self.beta, "beta")?;
        check(is_matching(g, &self.matching) && self.matching.len() == self.beta1, "beta1")?;
        match (&self.edge_cover, self.alpha1) {
            (Some(c), Some(a1)) => check(is_edge_cover(g, c) && c.len() == a1, "alpha1"),
            (None, None) => check(g.isolated_vertex().is_some(), "alpha1"),
            _ => Err("alpha1 witness inconsistent".into()),
        }
    }
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

/// Exhaustive-subset value of `which`, straight from the definitions.
///
/// Vertex parameters need order <= 20, edge parameters need at most 20 edges.
pub fn brute_invariant(g: &Graph, which: Param) -> Result<usize, InvariantError> {
    let n = g.order();
    if which.is_edge_param() {
        let edges = g.edges();
        let m = edges.len();
        if m > ORACLE_EDGE_CAP {
            return Err(InvariantError::OracleCapacity {
                param: which,
                size: m,
                cap: ORACLE_EDGE_CAP,
            });
        }
        let mut best: Option<usize> = None;
        for subset in 0u32..(1u32 << m) {
            let picked: Vec<Edge> = (0..m).filter(|i| subset >> i & 1 == 1).map(|i| edges[i]).collect();
            let mut hits = vec![0usize; n];
            for &(u, v) in &picked {
                hits[u] += 1;
                hits[v] += 1;
            }
            let size = picked.len();
            let feasible = match which {
                Param::Beta1 => hits.iter().all(|&h| h <= 1),
                _ => hits.iter().all(|&h| h >= 1),
            };
            if feasible {
                best = Some(match (which, best) {
                    (_, None) => size,
                    (Param::Beta1, Some(b)) => b.max(size),
                    (_, Some(b)) => b.min(size),
                });
            }
        }
        return best.ok_or_else(|| {
            InvariantError::IsolatedVertex((0..n).find(|&v| g.degree(v) == 0).unwrap_or(0))
        });
    }

    if n > ORACLE_VERTEX_CAP {
        return Err(InvariantError::OracleCapacity {
            param: which,
            size: n,
            cap: ORACLE_VERTEX_CAP,
        });
    }
    let mut best: Option<usize> = None;
    for subset in 0u32..(1u32 << n) {
        let inside = |v: usize| subset >> v & 1 == 1;
        let feasible = match which {
            Param::Gamma => (0..n).all(|v| inside(v) || (0..n).any(|u| inside(u) && g.has_edge(u, v))),
            Param::Beta => (0..n).all(|u| (0..n).all(|v| !(inside(u) && inside(v) && g.has_edge(u, v)))),
            Param::Alpha => (0..n).all(|u| (0..n).all(|v| !g.has_edge(u, v) || inside(u) || inside(v))),
            Param::Alpha1 | Param::Beta1 => unreachable!(),
        };
        if feasible {
            let size = subset.count_ones() as usize;
            best = Some(match (which, best) {
                (_, None) => size,
                (Param::Beta, Some(b)) => b.max(size),
                (_, Some(b)) => b.min(size),
            });
        }
    }
    Ok(best.expect("the full or empty vertex set is always feasible"))
}
