//! Graph strength: the minimum, over all numberings `f: V -> [1, n]`, of the
//! largest edge label `f(u) + f(v)`.
//!
//! Two independent routes compute it:
//!
//! * [`strength_exact`] runs a branch-and-bound search that hands out labels
//!   from `n` downward, tightening an incumbent that starts at `2n - 1`;
//! * [`strength_via_fk`] finds the largest `k` such that `F_k` embeds in the
//!   complement and reports `2n - k` (valid when no vertex is isolated).
//!
//! [`strength_oracle`] enumerates all `n!` numberings and exists only for
//! cross-checking.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, Bits, Graph};

/// Largest order accepted by [`strength_exact`].
pub const EXACT_CAP: usize = 16;
/// Largest order accepted by [`strength_oracle`].
pub const ORACLE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrengthError {
    #[error("graph has no edges; its strength is infinite")]
    NoEdges,
    #[error("invalid numbering: {0}")]
    InvalidNumbering(String),
    #[error("order {order} exceeds the cap of {cap}")]
    Capacity { order: usize, cap: usize },
    #[error("vertex {0} is isolated; the F_k characterization needs minimum degree >= 1")]
    IsolatedVertex(usize),
    #[error("k = {k} is outside [2, {order}]")]
    KOutOfRange { k: usize, order: usize },
    #[error("certificate check failed: {0}")]
    Certificate(String),
}

/// A bijection from vertices to `1..=n`; `labels[v]` is the label of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Numbering {
    labels: Vec<usize>,
}

impl Numbering {
    pub fn new(labels: Vec<usize>) -> Result<Self, StrengthError> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(StrengthError::InvalidNumbering(format!(
                    "vertex {v} has label {l} outside [1, {n}]"
                )));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(StrengthError::InvalidNumbering(format!("label {l} used twice")));
            }
        }
        Ok(Numbering { labels })
    }

    pub fn identity(n: usize) -> Self {
        Numbering {
            labels: (1..=n).collect(),
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// `str_f(G)`: the largest edge label under `f`.
pub fn strength_of_numbering(g: &Graph, f: &Numbering) -> Result<usize, StrengthError> {
    if f.len() != g.order() {
        return Err(StrengthError::InvalidNumbering(format!(
            "numbering has {} labels for a graph of order {}",
            f.len(),
            g.order()
        )));
    }
    g.edges()
        .iter()
        .map(|&(u, v)| f.label(u) + f.label(v))
        .max()
        .ok_or(StrengthError::NoEdges)
}

// ---------------------------------------------------------------------------
// F_k embeddings
// ---------------------------------------------------------------------------

/// Injective map `v_1..v_k -> host` (stored 0-based by position) such that
/// positions `i < j` with `i + j <= k + 1` land on adjacent host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FkEmbedding {
    pub k: usize,
    pub map: Vec<usize>,
}

impl FkEmbedding {
    /// Checks injectivity and every required adjacency in `host`.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        if self.k < 2 || self.map.len() != self.k || self.map.iter().any(|&w| w >= host.order()) {
            return false;
        }
        let mut used = 0u64;
        for &w in &self.map {
            if used & bit(w) != 0 {
                return false;
            }
            used |= bit(w);
        }
        (1..=self.k).all(|i| {
            ((i + 1)..=self.k)
                .filter(|&j| i + j <= self.k + 1)
                .all(|j| host.has_edge(self.map[i - 1], self.map[j - 1]))
        })
    }
}

struct FkSearch<'a> {
    host: &'a Graph,
    k: usize,
    map: Vec<usize>,
}

impl FkSearch<'_> {
    /// Degree of 1-based position `i` in `F_k`.
    fn fk_degree(&self, i: usize) -> usize {
        let reach = self.k + 1 - i; // partners j <= k + 1 - i
        if i <= reach {
            reach - 1
        } else {
            reach
        }
    }

    fn place(&mut self, used: u64) -> bool {
        let i = self.map.len() + 1;
        if i > self.k {
            return true;
        }
        // position i must hit every earlier position j with i + j <= k + 1
        let mut cand = self.host.vertex_mask() & !used;
        for j in 1..i.min(self.k + 2 - i) {
            cand &= self.host.neighbors(self.map[j - 1]);
        }
        let need = self.fk_degree(i);
        for w in Bits(cand) {
            if self.host.degree(w) < need {
                continue;
            }
            let used = used | bit(w);
            self.map.push(w);
            // every placed position j still owes adjacency to positions i+1..=k+1-j
            let viable = (1..=i).all(|j| {
                let owed = (self.k + 1 - j).saturating_sub(i);
                (self.host.neighbors(self.map[j - 1]) & !used).count_ones() as usize >= owed
            });
            if viable && self.place(used) {
                return true;
            }
            self.map.pop();
        }
        false
    }
}

/// Finds an embedding of `F_k` into `host`, filling positions `1, 2, ..., k` in
/// order and trying host vertices in ascending index order.
pub fn fk_embed(host: &Graph, k: usize) -> Result<Option<FkEmbedding>, StrengthError> {
    if k < 2 || k > host.order() {
        return Err(StrengthError::KOutOfRange {
            k,
            order: host.order(),
        });
    }
    let mut s = FkSearch {
        host,
        k,
        map: Vec::with_capacity(k),
    };
    Ok(s.place(0).then_some(FkEmbedding { k, map: s.map }))
}

/// Largest `k` in `[2, n - 1]` with `F_k` embedded in `host`, with its
/// embedding. Uses that `F_k` sits inside `F_{k+1}`, so presence is monotone in `k`.
pub fn max_fk(host: &Graph) -> Option<FkEmbedding> {
    let n = host.order();
    if n < 3 {
        return None;
    }
    let embed = |k| fk_embed(host, k).expect("k within range");
    let mut best = embed(2)?;
    let (mut lo, mut hi) = (3, n - 1);
    while lo <= hi {
        let mid = (lo + hi) / 2;
        match embed(mid) {
            Some(e) => {
                best = e;
                lo = mid + 1;
            }
            None => hi = mid - 1,
        }
    }
    Some(best)
}

/// Whether `F_k` embeds in `host`, by trying every injective ordered `k`-tuple
/// of host vertices. Only for hosts of order <= 8.
pub fn fk_oracle(host: &Graph, k: usize) -> bool {
    assert!(host.order() <= ORACLE_CAP, "fk_oracle is limited to order {ORACLE_CAP}");
    fn extend(host: &Graph, k: usize, tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == k {
            return (1..=k).all(|i| {
                (i + 1..=k).all(|j| !crate::graph::fk_adjacent(k, i, j) || host.has_edge(tuple[i - 1], tuple[j - 1]))
            });
        }
        for w in 0..host.order() {
            if !tuple.contains(&w) {
                tuple.push(w);
                if extend(host, k, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    (2..=host.order()).contains(&k) && extend(host, k, &mut Vec::with_capacity(k))
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrengthCertificate {
    pub value: usize,
    pub numbering: Numbering,
    /// Largest `k` in `[2, n - 1]` with `F_k` inside the complement.
    pub k_max: Option<usize>,
    pub fk_witness: Option<FkEmbedding>,
}

impl StrengthCertificate {
    /// Re-evaluates the numbering and the embedding against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), StrengthError> {
        let fail = |m: String| Err(StrengthError::Certificate(m));
        let n = g.order();
        let got = strength_of_numbering(g, &self.numbering)?;
        if got != self.value {
            return fail(format!("numbering attains {got}, certificate claims {}", self.value));
        }
        if self.value < 3 || self.value > 2 * n - 1 {
            return fail(format!("value {} outside [3, {}]", self.value, 2 * n - 1));
        }
        match (&self.fk_witness, self.k_max) {
            (Some(e), Some(k)) => {
                if e.k != k || k > n - 1 || !e.is_valid_in(&g.complement()) {
                    return fail(format!("F_{k} witness does not embed in the complement"));
                }
            }
            (None, None) => {}
            _ => return fail("k_max and F_k witness disagree".into()),
        }
        if g.min_degree() >= 1 {
            let expected = self.k_max.map_or(2 * n - 1, |k| 2 * n - k);
            if expected != self.value {
                return fail(format!("2n - k_max = {expected} but value is {}", self.value));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// branch and bound
// ---------------------------------------------------------------------------

/// Decision search: is there a numbering with every edge label <= `target`,
/// consistent with `fixed` (label per vertex, 0 = free)?
struct Decider<'a> {
    g: &'a Graph,
    n: usize,
    target: usize,
    fixed: &'a [usize],
    /// `owner[l]` is the vertex pinned to label `l`
    owner: Vec<Option<usize>>,
    /// `twin_below[v]`: vertices `w < v` with `N(v) - w == N(w) - v`
    twin_below: Vec<u64>,
    labels: Vec<usize>,
    /// largest label among labeled neighbors, 0 if none
    top_nbr: Vec<usize>,
}

impl<'a> Decider<'a> {
    fn new(g: &'a Graph, target: usize, fixed: &'a [usize]) -> Self {
        let n = g.order();
        let mut owner = vec![None; n + 1];
        for (v, &l) in fixed.iter().enumerate() {
            if l != 0 {
                owner[l] = Some(v);
            }
        }
        let twin_below = (0..n)
            .map(|v| {
                (0..v)
                    .filter(|&w| {
                        g.neighbors(v) & !bit(w) == g.neighbors(w) & !bit(v)
                    })
                    .fold(0u64, |m, w| m | bit(w))
            })
            .collect();
        Decider {
            g,
            n,
            target,
            fixed,
            owner,
            twin_below,
            labels: vec![0; n],
            top_nbr: vec![0; n],
        }
    }

    fn cap(&self, v: usize, below: usize) -> usize {
        if self.top_nbr[v] == 0 {
            below
        } else {
            below.min(self.target.saturating_sub(self.top_nbr[v]))
        }
    }

    /// Hall check for the still-unlabeled vertices against labels `1..=below`.
    /// Pinned vertices need their own label within their cap; free vertices
    /// compete for the unpinned labels, whose admissible sets are nested.
    fn hall_ok(&self, below: usize, free_caps: &mut Vec<usize>) -> bool {
        free_caps.clear();
        for v in 0..self.n {
            if self.labels[v] != 0 {
                continue;
            }
            let c = self.cap(v, below);
            if self.fixed[v] != 0 {
                if self.fixed[v] > c {
                    return false;
                }
            } else {
                free_caps.push(c);
            }
        }
        free_caps.sort_unstable();
        let mut free_upto = 0;
        let mut l = 0;
        for (i, &c) in free_caps.iter().enumerate() {
            while l < c {
                l += 1;
                if self.owner[l].is_none() {
                    free_upto += 1;
                }
            }
            if free_upto < i + 1 {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, v: usize, l: usize) {
        self.labels[v] = l;
        for u in Bits(self.g.neighbors(v)) {
            if self.labels[u] == 0 {
                self.top_nbr[u] = self.top_nbr[u].max(l);
            }
        }
    }

    fn solve(&mut self, next: usize) -> bool {
        let mut caps = Vec::with_capacity(self.n);
        self.step(next, &mut caps)
    }

    fn step(&mut self, next: usize, caps: &mut Vec<usize>) -> bool {
        if next == 0 {
            return true;
        }
        // the two largest remaining labels fit under target, so only edges to
        // already-labeled vertices matter and a greedy fill completes the search
        if next + next.saturating_sub(1) <= self.target {
            if !self.hall_ok(next, caps) {
                return false;
            }
            let mut free: Vec<usize> = (0..self.n)
                .filter(|&v| self.labels[v] == 0 && self.fixed[v] == 0)
                .collect();
            free.sort_by_key(|&v| (self.cap(v, next), v));
            let spare = (1..=next).filter(|&l| self.owner[l].is_none());
            for (v, l) in free.into_iter().zip(spare) {
                self.labels[v] = l;
            }
            for v in 0..self.n {
                if self.fixed[v] != 0 {
                    self.labels[v] = self.fixed[v];
                }
            }
            return true;
        }

        let saved = self.top_nbr.clone();
        let candidates: Vec<usize> = match self.owner[next] {
            Some(v) => vec![v],
            None => (0..self.n)
                .filter(|&v| self.labels[v] == 0 && self.fixed[v] == 0)
                .collect(),
        };
        let mut tried = 0u64;
        for v in candidates {
            if self.top_nbr[v] != 0 && self.top_nbr[v] + next > self.target {
                continue;
            }
            // swapping two unlabeled free twins is an automorphism
            if self.fixed[v] == 0 && self.twin_below[v] & tried != 0 {
                continue;
            }
            tried |= bit(v);
            self.assign(v, next);
            if self.hall_ok(next - 1, caps) && self.step(next - 1, caps) {
                return true;
            }
            self.labels[v] = 0;
            self.top_nbr.clone_from(&saved);
        }
        false
    }
}

fn decide(g: &Graph, target: usize, fixed: &[usize]) -> Option<Numbering> {
    let mut d = Decider::new(g, target, fixed);
    d.solve(g.order()).then_some(Numbering { labels: d.labels })
}

/// Exact strength by branch and bound, capped at order 16.
///
/// The reported numbering is the lexicographically smallest optimal one
/// (compared as the label sequence of vertices `0, 1, ...`).
pub fn strength_exact(g: &Graph) -> Result<StrengthCertificate, StrengthError> {
    let n = g.order();
    if !g.has_edges() {
        return Err(StrengthError::NoEdges);
    }
    if n > EXACT_CAP {
        return Err(StrengthError::Capacity { order: n, cap: EXACT_CAP });
    }
    let none_fixed = vec![0; n];
    let mut value = strength_of_numbering(g, &Numbering::identity(n))?;
    while value > 3 {
        match decide(g, value - 1, &none_fixed) {
            Some(better) => value = strength_of_numbering(g, &better)?,
            None => break,
        }
    }

    // lexicographically smallest numbering attaining `value`
    let mut fixed = vec![0; n];
    let mut used = vec![false; n + 1];
    for v in 0..n {
        let mut chosen = None;
        for l in (1..=n).filter(|&l| !used[l]) {
            if Bits(g.neighbors(v)).any(|u| fixed[u] != 0 && fixed[u] + l > value) {
                continue;
            }
            fixed[v] = l;
            if decide(g, value, &fixed).is_some() {
                chosen = Some(l);
                break;
            }
        }
        let l = chosen.expect("an optimal numbering extends the prefix");
        fixed[v] = l;
        used[l] = true;
    }
    let numbering = Numbering { labels: fixed };
    debug_assert_eq!(strength_of_numbering(g, &numbering).ok(), Some(value));

    let fk_witness = max_fk(&g.complement());
    let cert = StrengthCertificate {
        value,
        numbering,
        k_max: fk_witness.as_ref().map(|e| e.k),
        fk_witness,
    };
    Ok(cert)
}

/// Exhaustive minimum over all `n!` numberings; order <= 8.
pub fn strength_oracle(g: &Graph) -> Result<usize, StrengthError> {
    let n = g.order();
    if n > ORACLE_CAP {
        return Err(StrengthError::Capacity { order: n, cap: ORACLE_CAP });
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Err(StrengthError::NoEdges);
    }
    // Heap's algorithm over label vectors
    let mut labels: Vec<usize> = (1..=n).collect();
    let eval = |ls: &[usize]| edges.iter().map(|&(u, v)| ls[u] + ls[v]).max().unwrap();
    let mut best = eval(&labels);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            best = best.min(eval(&labels));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Strength through the largest `F_k` in the complement. Requires minimum
/// degree >= 1; the numbering gives `w_i` (the image of `v_i`) label `n + 1 - i`
/// and the remaining labels to the other vertices in index order.
pub fn strength_via_fk(g: &Graph) -> Result<StrengthCertificate, StrengthError> {
    if !g.has_edges() {
        return Err(StrengthError::NoEdges);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(StrengthError::IsolatedVertex(v));
    }
    let n = g.order();
    let fk_witness = max_fk(&g.complement());
    let (value, numbering) = match &fk_witness {
        None => (2 * n - 1, Numbering::identity(n)),
        Some(e) => {
            let mut labels = vec![0; n];
            for (i, &w) in e.map.iter().enumerate() {
                labels[w] = n - i;
            }
            for (next, l) in (1..).zip(labels.iter_mut().filter(|l| **l == 0)) {
                *l = next;
            }
            (2 * n - e.k, Numbering { labels })
        }
    };
    let cert = StrengthCertificate {
        value,
        numbering,
        k_max: fk_witness.as_ref().map(|e| e.k),
        fk_witness,
    };
    cert.verify(g)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn gen(f: Family, n: usize) -> Graph {
        Graph::generate(f, n).unwrap()
    }

    fn two_p3() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn numbering_validation() {
        assert!(Numbering::new(vec![2, 1, 3]).is_ok());
        assert!(matches!(Numbering::new(vec![1, 1, 3]), Err(StrengthError::InvalidNumbering(_))));
        assert!(matches!(Numbering::new(vec![0, 1]), Err(StrengthError::InvalidNumbering(_))));
        assert!(matches!(Numbering::new(vec![1, 4, 2]), Err(StrengthError::InvalidNumbering(_))));
        let k2 = gen(Family::Complete, 2);
        assert!(matches!(
            strength_of_numbering(&k2, &Numbering::identity(3)),
            Err(StrengthError::InvalidNumbering(_))
        ));
    }

    #[test]
    fn numbering_strength_examples() {
        let k2 = gen(Family::Complete, 2);
        assert_eq!(strength_of_numbering(&k2, &Numbering::identity(2)), Ok(3));
        let k3 = gen(Family::Complete, 3);
        for labels in [[1, 2, 3], [3, 1, 2], [2, 3, 1]] {
            assert_eq!(strength_of_numbering(&k3, &Numbering::new(labels.to_vec()).unwrap()), Ok(5));
        }
        // P_3 with center 1 labeled 1
        let p3 = gen(Family::Path, 3);
        assert_eq!(strength_of_numbering(&p3, &Numbering::new(vec![2, 1, 3]).unwrap()), Ok(4));
        assert_eq!(
            strength_of_numbering(&Graph::empty(3).unwrap(), &Numbering::identity(3)),
            Err(StrengthError::NoEdges)
        );
    }

    #[test]
    fn exact_examples() {
        assert_eq!(strength_exact(&gen(Family::Complete, 5)).unwrap().value, 9);
        assert_eq!(strength_exact(&gen(Family::Cycle, 5)).unwrap().value, 7);
        assert_eq!(strength_exact(&gen(Family::Star, 5)).unwrap().value, 6);
        assert_eq!(strength_exact(&Graph::empty(4).unwrap()), Err(StrengthError::NoEdges));
        assert_eq!(
            strength_exact(&gen(Family::Cycle, 17)),
            Err(StrengthError::Capacity { order: 17, cap: 16 })
        );
    }

    #[test]
    fn exact_numbering_is_lexicographically_smallest() {
        // K_{1,4}: str 6 forces the center to label 1
        let c = strength_exact(&gen(Family::Star, 5)).unwrap();
        assert_eq!(c.numbering.labels(), &[1, 2, 3, 4, 5]);
        // P_3 at strength 4: the center must carry label 1
        let p3 = strength_exact(&gen(Family::Path, 3)).unwrap();
        assert_eq!(p3.value, 4);
        assert_eq!(p3.numbering.labels(), &[2, 1, 3]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(strength_oracle(&gen(Family::Complete, 4)), Ok(7));
        assert_eq!(strength_oracle(&gen(Family::Cycle, 3)), Ok(5));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(strength_oracle(&two_k2), Ok(5));
        assert_eq!(
            strength_oracle(&gen(Family::Path, 9)),
            Err(StrengthError::Capacity { order: 9, cap: 8 })
        );
    }

    #[test]
    fn fk_embed_examples() {
        let e = fk_embed(&gen(Family::Path, 3), 2).unwrap().unwrap();
        assert_eq!(e.map, vec![0, 1]);
        let host = two_p3().complement();
        let e = fk_embed(&host, 3).unwrap().unwrap();
        assert!(e.is_valid_in(&host));
        assert_eq!(fk_embed(&Graph::empty(3).unwrap(), 2), Ok(None));
        assert_eq!(
            fk_embed(&Graph::empty(3).unwrap(), 4),
            Err(StrengthError::KOutOfRange { k: 4, order: 3 })
        );
        assert!(fk_embed(&Graph::empty(3).unwrap(), 1).is_err());
    }

    #[test]
    fn max_fk_examples() {
        assert_eq!(max_fk(&gen(Family::Complete, 5).complement()), None);
        assert_eq!(max_fk(&gen(Family::Cycle, 5).complement()).map(|e| e.k), Some(3));
        // F_5 padded with two isolated vertices
        let f5 = gen(Family::Fk, 5);
        let padded = Graph::from_edges(7, &f5.edges()).unwrap();
        assert!(max_fk(&padded).unwrap().k >= 5);
    }

    #[test]
    fn via_fk_examples() {
        let k5 = strength_via_fk(&gen(Family::Complete, 5)).unwrap();
        assert_eq!((k5.value, k5.k_max), (9, None));
        let c5 = strength_via_fk(&gen(Family::Cycle, 5)).unwrap();
        assert_eq!((c5.value, c5.k_max), (7, Some(3)));
        assert_eq!(strength_via_fk(&two_p3()).unwrap().value, 7);
        let with_isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(strength_via_fk(&with_isolated), Err(StrengthError::IsolatedVertex(2)));
    }

    #[test]
    fn edge_plus_isolated_vertices_falls_below_n_plus_one() {
        // K_2 + 2K_1: labels 1 and 2 on the edge give strength 3 < n + 1
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let c = strength_exact(&g).unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(strength_oracle(&g), Ok(3));
        c.verify(&g).unwrap();
    }
}
