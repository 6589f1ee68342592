//! Catalog of strength/domination relations, each encoded as a gated predicate.
//!
//! A claim is evaluated only when its hypothesis holds; otherwise the outcome is
//! `not-applicable`. Biconditionals are checked in both directions and report
//! the direction that failed. A violation is an outcome with a witness, not an
//! error.
//!
//! The verdict logic lives in [`judge`], generic over [`Facts`]; [`revalidate`]
//! replays it on values from the brute-force oracles.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, InvariantBundle, Param};
use crate::strength::{self, FkEmbedding, Numbering, StrengthCertificate, StrengthError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::C3 => "C3",
            ClaimId::C4 => "C4",
            ClaimId::C5 => "C5",
            ClaimId::C6 => "C6",
            ClaimId::C7 => "C7",
            ClaimId::C8 => "C8",
            ClaimId::C9 => "C9",
            ClaimId::C10 => "C10",
        }
    }

    pub fn claim(self) -> &'static Claim {
        &CATALOG[self as usize]
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim id `{0}` (expected C1..C10)")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Parses a comma-separated list such as `C1,C3`; `all` selects the catalog.
pub fn parse_claim_list(s: &str) -> Result<Vec<ClaimId>, UnknownClaim> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut ids = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<ClaimId>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

/// Static description of one catalog entry.
#[derive(Debug)]
pub struct Claim {
    pub id: ClaimId,
    pub hypothesis: &'static str,
    pub statement: &'static str,
    pub biconditional: bool,
    pub uses_strength: bool,
}

pub static CATALOG: [Claim; 10] = [
    Claim {
        id: ClaimId::C1,
        hypothesis: "delta >= 1",
        statement: "str >= n + delta",
        biconditional: false,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C2,
        hypothesis: "at least one edge",
        statement: "str >= 2n - 2 gamma + 1",
        biconditional: false,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C3,
        hypothesis: "at least one edge; every k in [2, n-1]",
        statement: "str <= 2n - k  <=>  F_k in complement",
        biconditional: true,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C4,
        hypothesis: "delta = n - k with k in [2, n-1]",
        statement: "str = n + delta  <=>  F_k in complement",
        biconditional: true,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C5,
        hypothesis: "gamma = k in [2, ceil(n/2)], at least one edge",
        statement: "str = 2n - 2 gamma + 1  <=>  F_{2k-1} in complement",
        biconditional: true,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C6,
        hypothesis: "beta = k in [2, ceil(n/2)], at least one edge",
        statement: "str = 2n - 2 beta + 1  <=>  F_{2k-1} in complement",
        biconditional: true,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C7,
        hypothesis: "gamma = k in [2, ceil(n/2)] and F_{2k-1} in complement",
        statement: "gamma = beta",
        biconditional: false,
        uses_strength: false,
    },
    Claim {
        id: ClaimId::C8,
        hypothesis: "delta >= 1 and str = n + delta",
        statement: "gamma >= ceil((n - delta + 1) / 2)",
        biconditional: false,
        uses_strength: true,
    },
    Claim {
        id: ClaimId::C9,
        hypothesis: "delta >= 1",
        statement: "gamma <= min{alpha, alpha1, beta, beta1}",
        biconditional: false,
        uses_strength: false,
    },
    Claim {
        id: ClaimId::C10,
        hypothesis: "delta >= 1",
        statement: "str >= 2n - 2 min{alpha, alpha1, beta, beta1} + 1",
        biconditional: false,
        uses_strength: true,
    },
];

// ---------------------------------------------------------------------------
// outcomes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// The strength-side condition held but the structural side did not.
    #[serde(rename = "forward")]
    Forward,
    /// The structural side held but the strength-side condition did not.
    #[serde(rename = "reverse")]
    Reverse,
    #[serde(rename = "n/a")]
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    Precondition,
    Capacity,
}

/// Strength as reported: an integer, `"infinity"` for edgeless graphs, or
/// `"capacity"` when the exact solver cap was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrValue {
    Finite(usize),
    Infinite,
    Capacity,
}

impl Serialize for StrValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            StrValue::Finite(v) => s.serialize_u64(*v as u64),
            StrValue::Infinite => s.serialize_str("infinity"),
            StrValue::Capacity => s.serialize_str("capacity"),
        }
    }
}

/// Values needed to re-check a verdict without the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub delta: usize,
    pub gamma: usize,
    pub alpha: usize,
    pub alpha1: Option<usize>,
    pub beta: usize,
    pub beta1: usize,
    #[serde(rename = "str")]
    pub strength: StrValue,
    pub k_max: Option<usize>,
    /// Strength labeling attaining `str`.
    pub numbering: Option<Numbering>,
    pub dominating_set: VertexSet,
    pub independent_set: VertexSet,
    /// The `F_k` embedding into the complement the verdict refers to, if any.
    pub embedding: Option<FkEmbedding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub claim: ClaimId,
    pub status: Status,
    pub direction: Direction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<SkipReason>,
    /// For inequalities that hold: whether the bound is attained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    /// The `k` the verdict is about (first failing `k` for C3).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Right-hand side of an inequality claim.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    /// Present on every violated outcome.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("claim {claim}: {source}")]
pub struct ClaimError {
    pub claim: ClaimId,
    pub source: StrengthError,
}

// ---------------------------------------------------------------------------
// verdict logic
// ---------------------------------------------------------------------------

/// What [`judge`] needs to know about a graph.
pub trait Facts {
    fn n(&self) -> usize;
    fn delta(&self) -> usize;
    fn has_edges(&self) -> bool;
    fn gamma(&self) -> usize;
    fn alpha(&self) -> usize;
    fn alpha1(&self) -> Option<usize>;
    fn beta(&self) -> usize;
    fn beta1(&self) -> usize;
    fn strength(&self) -> StrValue;
    /// Whether `F_k` embeds in the complement, for `k` in `[2, n]`.
    fn fk_in_complement(&self, k: usize) -> bool;
}

/// Verdict without witness payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub direction: Direction,
    pub reason: Option<SkipReason>,
    pub equality: Option<bool>,
    pub k: Option<usize>,
    pub bound: Option<i64>,
}

impl Verdict {
    fn skip(reason: SkipReason) -> Self {
        Verdict {
            status: Status::NotApplicable,
            direction: Direction::NotApplicable,
            reason: Some(reason),
            equality: None,
            k: None,
            bound: None,
        }
    }

    fn inequality(holds: bool, tight: bool, bound: i64) -> Self {
        Verdict {
            status: if holds { Status::Holds } else { Status::Violated },
            direction: Direction::NotApplicable,
            reason: None,
            equality: holds.then_some(tight),
            k: None,
            bound: Some(bound),
        }
    }

    /// `lhs <=> rhs` where `lhs` is the strength-side condition.
    fn biconditional(lhs: bool, rhs: bool, k: usize) -> Self {
        let (status, direction) = match (lhs, rhs) {
            (true, false) => (Status::Violated, Direction::Forward),
            (false, true) => (Status::Violated, Direction::Reverse),
            _ => (Status::Holds, Direction::NotApplicable),
        };
        Verdict {
            status,
            direction,
            reason: None,
            equality: None,
            k: Some(k),
            bound: None,
        }
    }
}

fn half_up(n: usize) -> usize {
    n.div_ceil(2)
}

/// Evaluates claim `id` on the given facts.
pub fn judge<F: Facts + ?Sized>(id: ClaimId, f: &F) -> Verdict {
    use SkipReason::{Capacity, Precondition};
    let n = f.n();
    let ni = n as i64;
    let delta = f.delta();
    // strength is looked up only once the str-free part of the hypothesis holds
    macro_rules! strength {
        () => {
            match f.strength() {
                StrValue::Finite(s) => s,
                StrValue::Infinite => return Verdict::skip(Precondition),
                StrValue::Capacity => return Verdict::skip(Capacity),
            }
        };
    }

    match id {
        ClaimId::C1 => {
            if delta < 1 {
                return Verdict::skip(Precondition);
            }
            let s = strength!();
            Verdict::inequality(s >= n + delta, s == n + delta, (n + delta) as i64)
        }
        ClaimId::C2 => {
            if !f.has_edges() {
                return Verdict::skip(Precondition);
            }
            let s = strength!() as i64;
            let bound = 2 * ni - 2 * f.gamma() as i64 + 1;
            Verdict::inequality(s >= bound, s == bound, bound)
        }
        ClaimId::C3 => {
            if !f.has_edges() {
                return Verdict::skip(Precondition);
            }
            let s = strength!();
            for k in 2..n {
                let v = Verdict::biconditional(s <= 2 * n - k, f.fk_in_complement(k), k);
                if v.status == Status::Violated {
                    return v;
                }
            }
            Verdict {
                k: None,
                ..Verdict::biconditional(true, true, 0)
            }
        }
        ClaimId::C4 => {
            if delta < 1 || n - delta < 2 {
                return Verdict::skip(Precondition);
            }
            let k = n - delta;
            let s = strength!();
            Verdict::biconditional(s == n + delta, f.fk_in_complement(k), k)
        }
        ClaimId::C5 | ClaimId::C6 => {
            let k = if id == ClaimId::C5 { f.gamma() } else { f.beta() };
            if !f.has_edges() || k < 2 || k > half_up(n) {
                return Verdict::skip(Precondition);
            }
            let s = strength!();
            Verdict::biconditional(s == 2 * n - 2 * k + 1, f.fk_in_complement(2 * k - 1), k)
        }
        ClaimId::C7 => {
            let k = f.gamma();
            if k < 2 || k > half_up(n) || !f.fk_in_complement(2 * k - 1) {
                return Verdict::skip(Precondition);
            }
            Verdict {
                status: if f.gamma() == f.beta() { Status::Holds } else { Status::Violated },
                direction: Direction::NotApplicable,
                reason: None,
                equality: None,
                k: Some(k),
                bound: None,
            }
        }
        ClaimId::C8 => {
            if delta < 1 {
                return Verdict::skip(Precondition);
            }
            let s = strength!();
            if s != n + delta {
                return Verdict::skip(Precondition);
            }
            let bound = half_up(n - delta + 1);
            Verdict::inequality(f.gamma() >= bound, f.gamma() == bound, bound as i64)
        }
        ClaimId::C9 | ClaimId::C10 => {
            let alpha1 = match f.alpha1() {
                Some(a) if delta >= 1 => a,
                _ => return Verdict::skip(Precondition),
            };
            let m = f.alpha().min(alpha1).min(f.beta()).min(f.beta1());
            if id == ClaimId::C9 {
                Verdict::inequality(f.gamma() <= m, f.gamma() == m, m as i64)
            } else {
                let s = strength!() as i64;
                let bound = 2 * ni - 2 * m as i64 + 1;
                Verdict::inequality(s >= bound, s == bound, bound)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// solver-backed profile
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrengthState {
    Exact(StrengthCertificate),
    Infinite,
    Capacity,
}

impl StrengthState {
    pub fn value(&self) -> StrValue {
        match self {
            StrengthState::Exact(c) => StrValue::Finite(c.value),
            StrengthState::Infinite => StrValue::Infinite,
            StrengthState::Capacity => StrValue::Capacity,
        }
    }
}

/// Everything the catalog needs about one graph, computed lazily and at most
/// once.
pub struct Profile<'g> {
    graph: &'g Graph,
    complement: Graph,
    bundle: OnceCell<Option<InvariantBundle>>,
    strength: OnceCell<Result<StrengthState, StrengthError>>,
    embeddings: OnceCell<Vec<OnceCell<Option<FkEmbedding>>>>,
}

impl<'g> Profile<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Profile {
            graph,
            complement: graph.complement(),
            bundle: OnceCell::new(),
            strength: OnceCell::new(),
            embeddings: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// `None` when the order exceeds the invariant solver cap.
    pub fn bundle(&self) -> Option<&InvariantBundle> {
        self.bundle
            .get_or_init(|| InvariantBundle::compute(self.graph).ok())
            .as_ref()
    }

    pub fn strength_state(&self) -> Result<&StrengthState, StrengthError> {
        self.strength
            .get_or_init(|| match strength::strength_exact(self.graph) {
                Ok(cert) => cert.verify(self.graph).map(|_| StrengthState::Exact(cert)),
                Err(StrengthError::NoEdges) => Ok(StrengthState::Infinite),
                Err(StrengthError::Capacity { .. }) => Ok(StrengthState::Capacity),
                Err(e) => Err(e),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Embedding of `F_k` into the complement, for `k` in `[2, n]`.
    pub fn embedding(&self, k: usize) -> Option<&FkEmbedding> {
        let n = self.graph.order();
        if k < 2 || k > n {
            return None;
        }
        let slots = self
            .embeddings
            .get_or_init(|| (0..=n).map(|_| OnceCell::new()).collect());
        slots[k]
            .get_or_init(|| strength::fk_embed(&self.complement, k).expect("k in range"))
            .as_ref()
    }

    fn bundle_ref(&self) -> &InvariantBundle {
        self.bundle().expect("bundle availability checked before judging")
    }

    fn witness(&self, embedding_k: Option<usize>) -> Witness {
        let b = self.bundle_ref();
        let state = self.strength_state().ok();
        let cert = match state {
            Some(StrengthState::Exact(c)) => Some(c),
            _ => None,
        };
        Witness {
            n: b.order,
            delta: b.delta,
            gamma: b.gamma,
            alpha: b.alpha,
            alpha1: b.alpha1,
            beta: b.beta,
            beta1: b.beta1,
            strength: state.map_or(StrValue::Capacity, StrengthState::value),
            k_max: cert
                .map(|c| c.k_max)
                .unwrap_or_else(|| strength::max_fk(&self.complement).map(|e| e.k)),
            numbering: cert.map(|c| c.numbering.clone()),
            dominating_set: b.dominating_set,
            independent_set: b.independent_set,
            embedding: embedding_k.and_then(|k| self.embedding(k).cloned()),
        }
    }

    /// Evaluates one claim against this profile.
    pub fn evaluate(&self, id: ClaimId) -> Result<ClaimOutcome, ClaimError> {
        if self.bundle().is_none() {
            return Ok(outcome(id, Verdict::skip(SkipReason::Capacity), None));
        }
        if id.claim().uses_strength {
            self.strength_state()
                .map_err(|source| ClaimError { claim: id, source })?;
        }
        let verdict = judge(id, self);
        let witness = (verdict.status == Status::Violated).then(|| {
            let embedding_k = match id {
                ClaimId::C3 | ClaimId::C4 => verdict.k,
                ClaimId::C5 | ClaimId::C6 | ClaimId::C7 => verdict.k.map(|k| 2 * k - 1),
                _ => None,
            };
            self.witness(embedding_k)
        });
        Ok(outcome(id, verdict, witness))
    }
}

fn outcome(id: ClaimId, v: Verdict, witness: Option<Witness>) -> ClaimOutcome {
    ClaimOutcome {
        claim: id,
        status: v.status,
        direction: v.direction,
        reason: v.reason,
        equality: v.equality,
        k: v.k,
        bound: v.bound,
        witness,
    }
}

impl Facts for Profile<'_> {
    fn n(&self) -> usize {
        self.graph.order()
    }
    fn delta(&self) -> usize {
        self.graph.min_degree()
    }
    fn has_edges(&self) -> bool {
        self.graph.has_edges()
    }
    fn gamma(&self) -> usize {
        self.bundle_ref().gamma
    }
    fn alpha(&self) -> usize {
        self.bundle_ref().alpha
    }
    fn alpha1(&self) -> Option<usize> {
        self.bundle_ref().alpha1
    }
    fn beta(&self) -> usize {
        self.bundle_ref().beta
    }
    fn beta1(&self) -> usize {
        self.bundle_ref().beta1
    }
    fn strength(&self) -> StrValue {
        self.strength_state().map_or(StrValue::Capacity, StrengthState::value)
    }
    fn fk_in_complement(&self, k: usize) -> bool {
        self.embedding(k).is_some()
    }
}

/// Evaluates claim `id` on `g`.
pub fn evaluate_claim(g: &Graph, id: ClaimId) -> Result<ClaimOutcome, ClaimError> {
    Profile::new(g).evaluate(id)
}

/// Evaluates the whole catalog in id order, sharing one profile.
pub fn evaluate_all(g: &Graph) -> Result<Vec<ClaimOutcome>, ClaimError> {
    evaluate_claims(g, &ClaimId::ALL)
}

/// Evaluates the given claims in the given order, sharing one profile.
pub fn evaluate_claims(g: &Graph, ids: &[ClaimId]) -> Result<Vec<ClaimOutcome>, ClaimError> {
    let p = Profile::new(g);
    ids.iter().map(|&id| p.evaluate(id)).collect()
}

// ---------------------------------------------------------------------------
// oracle replay
// ---------------------------------------------------------------------------

/// Facts recomputed from the brute-force oracles only.
struct OracleFacts {
    n: usize,
    delta: usize,
    has_edges: bool,
    gamma: usize,
    alpha: usize,
    alpha1: Option<usize>,
    beta: usize,
    beta1: usize,
    strength: Option<usize>,
    complement: Graph,
}

impl OracleFacts {
    fn compute(g: &Graph) -> Result<Self, String> {
        let brute = |p| invariants::brute_invariant(g, p).map_err(|e| e.to_string());
        let strength = match strength::strength_oracle(g) {
            Ok(s) => Some(s),
            Err(StrengthError::NoEdges) => None,
            Err(e) => return Err(e.to_string()),
        };
        Ok(OracleFacts {
            n: g.order(),
            delta: (0..g.order()).map(|v| g.neighbor_list(v).len()).min().unwrap_or(0),
            has_edges: !g.edges().is_empty(),
            gamma: brute(Param::Gamma)?,
            alpha: brute(Param::Alpha)?,
            alpha1: invariants::brute_invariant(g, Param::Alpha1).ok(),
            beta: brute(Param::Beta)?,
            beta1: brute(Param::Beta1)?,
            strength,
            complement: g.complement(),
        })
    }
}

impl Facts for OracleFacts {
    fn n(&self) -> usize {
        self.n
    }
    fn delta(&self) -> usize {
        self.delta
    }
    fn has_edges(&self) -> bool {
        self.has_edges
    }
    fn gamma(&self) -> usize {
        self.gamma
    }
    fn alpha(&self) -> usize {
        self.alpha
    }
    fn alpha1(&self) -> Option<usize> {
        self.alpha1
    }
    fn beta(&self) -> usize {
        self.beta
    }
    fn beta1(&self) -> usize {
        self.beta1
    }
    fn strength(&self) -> StrValue {
        self.strength.map_or(StrValue::Infinite, StrValue::Finite)
    }
    fn fk_in_complement(&self, k: usize) -> bool {
        strength::fk_oracle(&self.complement, k)
    }
}

/// Re-derives an outcome from scratch with the brute-force oracles (order <= 8)
/// and checks the recorded witness against them.
pub fn revalidate(g: &Graph, recorded: &ClaimOutcome) -> Result<(), String> {
    let facts = OracleFacts::compute(g)?;
    let v = judge(recorded.claim, &facts);
    let got = (v.status, v.direction, v.k);
    let want = (recorded.status, recorded.direction, recorded.k);
    if got != want {
        return Err(format!("{}: oracle verdict {got:?} differs from recorded {want:?}", recorded.claim));
    }
    let Some(w) = &recorded.witness else {
        return if recorded.status == Status::Violated {
            Err(format!("{}: violated outcome without witness", recorded.claim))
        } else {
            Ok(())
        };
    };
    let mismatch = |what: &str| Err(format!("{}: witness {what} disagrees with oracle", recorded.claim));
    if (w.n, w.delta) != (facts.n, facts.delta) {
        return mismatch("order/min degree");
    }
    if (w.gamma, w.alpha, w.alpha1, w.beta, w.beta1)
        != (facts.gamma, facts.alpha, facts.alpha1, facts.beta, facts.beta1)
    {
        return mismatch("covering/independence values");
    }
    let oracle_str = facts.strength.map_or(StrValue::Infinite, StrValue::Finite);
    if w.strength != oracle_str {
        return mismatch("strength");
    }
    if let (Some(f), StrValue::Finite(s)) = (&w.numbering, w.strength) {
        if strength::strength_of_numbering(g, f).ok() != Some(s) {
            return mismatch("numbering");
        }
    }
    if !invariants::is_dominating(g, w.dominating_set) || w.dominating_set.len() != w.gamma {
        return mismatch("dominating set");
    }
    if !invariants::is_independent(g, w.independent_set) || w.independent_set.len() != w.beta {
        return mismatch("independent set");
    }
    if let Some(e) = &w.embedding {
        if !e.is_valid_in(&facts.complement) {
            return mismatch("embedding");
        }
    }
    let oracle_kmax = (2..g.order()).rev().find(|&k| strength::fk_oracle(&facts.complement, k));
    if w.k_max != oracle_kmax {
        return mismatch("k_max");
    }
    Ok(())
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
    fn parse_ids() {
        assert_eq!("c10".parse::<ClaimId>().unwrap(), ClaimId::C10);
        assert!("C11".parse::<ClaimId>().is_err());
        assert_eq!(parse_claim_list("C3,C1,C3").unwrap(), vec![ClaimId::C1, ClaimId::C3]);
        assert_eq!(parse_claim_list("all").unwrap().len(), 10);
        for (i, c) in CATALOG.iter().enumerate() {
            assert_eq!(c.id as usize, i);
        }
    }

    #[test]
    fn complete_graph_c2_equality() {
        let o = evaluate_claim(&gen(Family::Complete, 5), ClaimId::C2).unwrap();
        assert_eq!((o.status, o.equality, o.bound), (Status::Holds, Some(true), Some(9)));
    }

    #[test]
    fn star_c2_violated() {
        let g = gen(Family::Star, 5);
        let o = evaluate_claim(&g, ClaimId::C2).unwrap();
        assert_eq!(o.status, Status::Violated);
        assert_eq!(o.bound, Some(9));
        let w = o.witness.as_ref().unwrap();
        assert_eq!((w.strength, w.gamma), (StrValue::Finite(6), 1));
        revalidate(&g, &o).unwrap();
    }

    #[test]
    fn c5_cycle_c10_equality() {
        let o = evaluate_claim(&gen(Family::Cycle, 5), ClaimId::C10).unwrap();
        assert_eq!((o.status, o.equality, o.bound), (Status::Holds, Some(true), Some(7)));
    }

    #[test]
    fn two_p3_c5_reverse() {
        let g = two_p3();
        let o = evaluate_claim(&g, ClaimId::C5).unwrap();
        assert_eq!((o.status, o.direction, o.k), (Status::Violated, Direction::Reverse, Some(2)));
        let w = o.witness.as_ref().unwrap();
        assert_eq!(w.strength, StrValue::Finite(7));
        assert_eq!(w.embedding.as_ref().unwrap().k, 3);
        revalidate(&g, &o).unwrap();
    }

    #[test]
    fn k2_catalog() {
        let out = evaluate_all(&gen(Family::Complete, 2)).unwrap();
        assert_eq!(out.len(), 10);
        let by = |id: ClaimId| out[id as usize].clone();
        assert_eq!(by(ClaimId::C1).status, Status::Holds);
        assert_eq!(by(ClaimId::C1).bound, Some(3));
        assert_eq!(by(ClaimId::C2).status, Status::Holds);
        assert_eq!(by(ClaimId::C2).bound, Some(3));
        assert_eq!(by(ClaimId::C9).status, Status::Holds);
        assert_eq!(by(ClaimId::C9).bound, Some(1));
    }

    #[test]
    fn empty_graph_all_skipped() {
        for o in evaluate_all(&Graph::empty(3).unwrap()).unwrap() {
            assert_eq!(o.status, Status::NotApplicable, "{}", o.claim);
            assert_eq!(o.reason, Some(SkipReason::Precondition));
        }
    }

    #[test]
    fn star_c8_violated() {
        let o = evaluate_claim(&gen(Family::Star, 5), ClaimId::C8).unwrap();
        assert_eq!((o.status, o.bound), (Status::Violated, Some(3)));
    }

    #[test]
    fn capacity_skips() {
        let g = gen(Family::Cycle, 17);
        let o = evaluate_claim(&g, ClaimId::C1).unwrap();
        assert_eq!((o.status, o.reason), (Status::NotApplicable, Some(SkipReason::Capacity)));
        // C9 does not need strength
        assert_eq!(evaluate_claim(&g, ClaimId::C9).unwrap().status, Status::Holds);
        let big = gen(Family::Cycle, 33);
        assert_eq!(evaluate_claim(&big, ClaimId::C9).unwrap().reason, Some(SkipReason::Capacity));
    }

    #[test]
    fn outcome_json_shape() {
        let o = evaluate_claim(&gen(Family::Star, 4), ClaimId::C2).unwrap();
        let v = serde_json::to_value(&o).unwrap();
        assert_eq!(v["claim"], "C2");
        assert_eq!(v["status"], "violated");
        assert_eq!(v["direction"], "n/a");
        assert_eq!(v["witness"]["str"], 5);
        let e = evaluate_claim(&Graph::empty(2).unwrap(), ClaimId::C1).unwrap();
        assert_eq!(serde_json::to_value(&e).unwrap()["status"], "not-applicable");
    }
}
