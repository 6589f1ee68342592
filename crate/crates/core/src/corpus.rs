//! Graph corpora and batch audits.
//!
//! A corpus is either every labeled graph of a given order (in edge-mask order)
//! or a graph6 file. Audits evaluate the claim catalog on each graph with a pool
//! of workers; results are merged back into corpus order before anything is
//! written.

use std::collections::HashSet;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::claims::{self, ClaimError, ClaimId, ClaimOutcome, Direction, Profile, Status, StrValue, Witness};
use crate::graph::{bit, Graph};
use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};
use crate::strength;

/// Orders accepted by [`enumerate_labeled`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;
/// Orders accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 8;
/// Version tag carried by every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

const CHUNK: usize = 2048;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("exhaustive order {0} is outside [1, {MAX_EXHAUSTIVE_ORDER}]")]
    OrderOutOfRange(usize),
    #[error("canonical form needs order <= {MAX_CANONICAL_ORDER}, got {0}")]
    CanonicalCapacity(usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("graph {graph6}: {source}")]
    Claim {
        graph6: String,
        #[source]
        source: ClaimError,
    },
    #[error("no claims requested")]
    NoClaims,
    #[error("writing report: {0}")]
    Write(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    MinDegreeOne,
    AtLeastOneEdge,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::MinDegreeOne => g.min_degree() >= 1,
            Filter::AtLeastOneEdge => g.has_edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown filter `{0}` (expected all, min-degree-one or edges)")]
pub struct UnknownFilter(String);

impl FromStr for Filter {
    type Err = UnknownFilter;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Filter::All),
            "min-degree-one" => Ok(Filter::MinDegreeOne),
            "edges" | "at-least-one-edge" => Ok(Filter::AtLeastOneEdge),
            other => Err(UnknownFilter(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dedup {
    Labeled,
    UpToIsomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Exhaustive(usize),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub source: Source,
    pub filter: Filter,
    pub dedup: Dedup,
}

impl CorpusSpec {
    pub fn exhaustive(n: usize, filter: Filter) -> Self {
        CorpusSpec {
            source: Source::Exhaustive(n),
            filter,
            dedup: Dedup::Labeled,
        }
    }

    pub fn file(path: impl Into<PathBuf>, filter: Filter) -> Self {
        CorpusSpec {
            source: Source::File(path.into()),
            filter,
            dedup: Dedup::Labeled,
        }
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }

    /// Streams the corpus in its fixed order, filtered and optionally reduced
    /// up to isomorphism.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Result<Graph, CorpusError>>>, CorpusError> {
        let base: Box<dyn Iterator<Item = Result<Graph, CorpusError>>> = match &self.source {
            Source::Exhaustive(n) => {
                if self.dedup == Dedup::UpToIsomorphism && *n > MAX_CANONICAL_ORDER {
                    return Err(CorpusError::CanonicalCapacity(*n));
                }
                Box::new(enumerate_labeled(*n, self.filter)?.map(Ok))
            }
            Source::File(path) => {
                let filter = self.filter;
                Box::new(read_graph6_file(path)?.filter(move |r| match r {
                    Ok(g) => filter.accepts(g),
                    Err(_) => true,
                }))
            }
        };
        Ok(match self.dedup {
            Dedup::Labeled => base,
            Dedup::UpToIsomorphism => Box::new(IsoDedup::new(base)),
        })
    }
}

/// Reads a graph6 file lazily, one token per nonblank line.
pub fn read_graph6_file(path: &Path) -> Result<impl Iterator<Item = Result<Graph, CorpusError>>, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let path = path.to_path_buf();
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Ok(lines.into_iter().map(move |(line, token)| {
        parse_graph6(&token).map_err(|source| CorpusError::Parse {
            path: path.clone(),
            line,
            source,
        })
    }))
}

// ---------------------------------------------------------------------------
// enumeration and canonical forms
// ---------------------------------------------------------------------------

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in increasing edge-mask
/// order where bit `e` of the mask is the `e`-th pair in graph6 order.
pub fn enumerate_labeled(n: usize, filter: Filter) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(CorpusError::OrderOutOfRange(n));
    }
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total)
        .map(move |mask| {
            let mut adj = vec![0u64; n];
            for (e, &(i, j)) in pairs.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
            Graph::from_adjacency(adj)
        })
        .filter(move |g| filter.accepts(g)))
}

struct Canon<'a> {
    g: &'a Graph,
    /// degree required at each position (non-increasing)
    target: Vec<usize>,
    perm: Vec<usize>,
    bits: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Canon<'_> {
    fn search(&mut self, used: u64) {
        let p = self.perm.len();
        let n = self.g.order();
        if p == n {
            if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        for v in 0..n {
            if used & bit(v) != 0 || self.g.degree(v) != self.target[p] {
                continue;
            }
            let start = self.bits.len();
            self.bits
                .extend(self.perm.iter().map(|&u| u8::from(self.g.has_edge(u, v))));
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.bits[..] > b[..self.bits.len()]);
            if !worse {
                self.perm.push(v);
                self.search(used | bit(v));
                self.perm.pop();
            }
            self.bits.truncate(start);
        }
    }
}

/// Isomorphism-invariant code: the order followed by the lexicographically
/// smallest upper-triangle bit sequence over all vertex orders that list
/// degrees in non-increasing order, packed MSB first.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>, CorpusError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(CorpusError::CanonicalCapacity(n));
    }
    let mut target = g.degrees();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let mut c = Canon {
        g,
        target,
        perm: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * n / 2),
        best: None,
    };
    c.search(0);
    let bits = c.best.expect("some degree-sorted order exists");
    let mut out = vec![n as u8];
    out.extend(bits.chunks(8).map(|ch| {
        ch.iter()
            .enumerate()
            .fold(0u8, |acc, (i, &b)| acc | (b << (7 - i)))
    }));
    Ok(out)
}

/// Keeps the first graph of every isomorphism class, preserving order.
struct IsoDedup<I> {
    inner: I,
    seen: HashSet<Vec<u8>>,
}

impl<I> IsoDedup<I> {
    fn new(inner: I) -> Self {
        IsoDedup {
            inner,
            seen: HashSet::new(),
        }
    }
}

impl<I: Iterator<Item = Result<Graph, CorpusError>>> Iterator for IsoDedup<I> {
    type Item = Result<Graph, CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let g = match self.inner.next()? {
                Ok(g) => g,
                Err(e) => return Some(Err(e)),
            };
            match canonical_code(&g) {
                Ok(code) => {
                    if self.seen.insert(code) {
                        return Some(Ok(g));
                    }
                }
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

/// Streams one representative per isomorphism class, in first-seen order.
pub fn dedup_nonisomorphic<I>(graphs: I) -> impl Iterator<Item = Result<Graph, CorpusError>>
where
    I: IntoIterator<Item = Graph>,
{
    IsoDedup::new(graphs.into_iter().map(Ok))
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

/// Per-graph values written with every report row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowValues {
    pub n: usize,
    pub edges: usize,
    pub delta: usize,
    pub gamma: Option<usize>,
    pub alpha: Option<usize>,
    pub alpha1: Option<usize>,
    pub beta: Option<usize>,
    pub beta1: Option<usize>,
    #[serde(rename = "str")]
    pub strength: StrValue,
    pub k_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub graph6: String,
    pub values: RowValues,
    pub outcomes: Vec<ClaimOutcome>,
}

/// One line of the counterexample file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub claim: ClaimId,
    pub direction: Direction,
    pub witness: Witness,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim: String,
    pub holds: u64,
    pub violated: u64,
    pub not_applicable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub schema_version: u32,
    pub graphs: u64,
    pub corpus_hash: String,
    pub violations: u64,
    pub claims: Vec<ClaimTally>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Rows plus summary for an audit kept in memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
    pub counterexamples: Vec<Counterexample>,
    pub summary: AuditSummary,
}

impl AuditReport {
    /// JSON lines: one per row, then the summary.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("rows serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub claims: Vec<ClaimId>,
    pub workers: usize,
    /// Record wall time in the summary; off for byte-stable output.
    pub timing: bool,
}

impl AuditOptions {
    pub fn new(claims: Vec<ClaimId>, workers: usize) -> Self {
        AuditOptions {
            claims,
            workers,
            timing: false,
        }
    }
}

fn evaluate_row(g: &Graph, claims: &[ClaimId]) -> Result<(AuditRow, Vec<Counterexample>), CorpusError> {
    let graph6 = emit_graph6(g);
    let p = Profile::new(g);
    let outcomes = claims
        .iter()
        .map(|&id| p.evaluate(id))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|source| CorpusError::Claim {
            graph6: graph6.clone(),
            source,
        })?;
    let state = p.strength_state().map_err(|e| CorpusError::Claim {
        graph6: graph6.clone(),
        source: ClaimError {
            claim: claims[0],
            source: e,
        },
    })?;
    let b = p.bundle();
    let k_max = match state {
        claims::StrengthState::Exact(c) => c.k_max,
        _ => strength::max_fk(&g.complement()).map(|e| e.k),
    };
    let values = RowValues {
        n: g.order(),
        edges: g.edge_count(),
        delta: g.min_degree(),
        gamma: b.map(|b| b.gamma),
        alpha: b.map(|b| b.alpha),
        alpha1: b.and_then(|b| b.alpha1),
        beta: b.map(|b| b.beta),
        beta1: b.map(|b| b.beta1),
        strength: state.value(),
        k_max,
    };
    let cex = outcomes
        .iter()
        .filter(|o| o.status == Status::Violated)
        .map(|o| Counterexample {
            graph6: graph6.clone(),
            claim: o.claim,
            direction: o.direction,
            witness: o.witness.clone().expect("violations carry witnesses"),
        })
        .collect();
    Ok((
        AuditRow {
            graph6,
            values,
            outcomes,
        },
        cex,
    ))
}

/// Receives audit rows in corpus order.
pub trait AuditSink {
    fn accept(&mut self, row: AuditRow, counterexamples: Vec<Counterexample>) -> io::Result<()>;
}

/// Writes rows and counterexamples as JSON lines to optional writers.
pub struct JsonlSink<R, C> {
    pub rows: Option<R>,
    pub counterexamples: Option<C>,
}

impl<R: Write, C: Write> AuditSink for JsonlSink<R, C> {
    fn accept(&mut self, row: AuditRow, cex: Vec<Counterexample>) -> io::Result<()> {
        if let Some(w) = self.rows.as_mut() {
            serde_json::to_writer(&mut *w, &row)?;
            w.write_all(b"\n")?;
        }
        if let Some(w) = self.counterexamples.as_mut() {
            for c in &cex {
                serde_json::to_writer(&mut *w, c)?;
                w.write_all(b"\n")?;
            }
        }
        Ok(())
    }
}

#[derive(Default)]
struct Collect {
    rows: Vec<AuditRow>,
    counterexamples: Vec<Counterexample>,
}

impl AuditSink for Collect {
    fn accept(&mut self, row: AuditRow, cex: Vec<Counterexample>) -> io::Result<()> {
        self.rows.push(row);
        self.counterexamples.extend(cex);
        Ok(())
    }
}

/// Streaming audit: evaluates chunks of the corpus in parallel and hands rows
/// to `sink` strictly in corpus order.
pub fn run_audit(
    spec: &CorpusSpec,
    options: &AuditOptions,
    sink: &mut dyn AuditSink,
) -> Result<AuditSummary, CorpusError> {
    if options.claims.is_empty() {
        return Err(CorpusError::NoClaims);
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .expect("thread pool");
    let mut tallies: Vec<ClaimTally> = options
        .claims
        .iter()
        .map(|c| ClaimTally {
            claim: c.to_string(),
            ..Default::default()
        })
        .collect();
    let mut hasher = Sha256::new();
    let mut graphs = 0u64;
    let mut violations = 0u64;

    let mut source = spec.graphs()?;
    loop {
        let chunk: Vec<Graph> = source.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = pool.install(|| {
            use rayon::prelude::*;
            chunk
                .par_iter()
                .map(|g| evaluate_row(g, &options.claims))
                .collect()
        });
        for r in results {
            let (row, cex) = r?;
            graphs += 1;
            hasher.update(row.graph6.as_bytes());
            hasher.update(b"\n");
            for (t, o) in tallies.iter_mut().zip(&row.outcomes) {
                match o.status {
                    Status::Holds => t.holds += 1,
                    Status::Violated => t.violated += 1,
                    Status::NotApplicable => t.not_applicable += 1,
                }
            }
            violations += cex.len() as u64;
            sink.accept(row, cex)?;
        }
    }

    let digest = hasher.finalize();
    Ok(AuditSummary {
        schema_version: SCHEMA_VERSION,
        graphs,
        corpus_hash: digest.iter().map(|b| format!("{b:02x}")).collect(),
        violations,
        claims: tallies,
        wall_time_ms: options.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

/// In-memory audit of the requested claims over the whole corpus.
pub fn audit_corpus(spec: &CorpusSpec, options: &AuditOptions) -> Result<AuditReport, CorpusError> {
    let mut sink = Collect::default();
    let summary = run_audit(spec, options, &mut sink)?;
    Ok(AuditReport {
        rows: sink.rows,
        counterexamples: sink.counterexamples,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled(4, Filter::All).unwrap().count(), 64);
        assert_eq!(enumerate_labeled(6, Filter::All).unwrap().count(), 32768);
        assert_eq!(enumerate_labeled(1, Filter::All).unwrap().count(), 1);
        assert!(matches!(enumerate_labeled(8, Filter::All), Err(CorpusError::OrderOutOfRange(8))));
        assert!(matches!(enumerate_labeled(0, Filter::All), Err(CorpusError::OrderOutOfRange(0))));
    }

    #[test]
    fn min_degree_filter_matches_recount() {
        let filtered = enumerate_labeled(4, Filter::MinDegreeOne).unwrap().count();
        let recount = enumerate_labeled(4, Filter::All)
            .unwrap()
            .filter(|g| g.edges().iter().fold(vec![false; 4], |mut seen, &(u, v)| {
                seen[u] = true;
                seen[v] = true;
                seen
            }).into_iter().all(|s| s))
            .count();
        assert_eq!(filtered, recount);
        // inclusion-exclusion over isolated vertices: 41 graphs on 4 vertices have none
        assert_eq!(filtered, 41);
    }

    #[test]
    fn enumeration_order_is_edge_mask_order() {
        let first: Vec<String> = enumerate_labeled(3, Filter::All).unwrap().take(3).map(|g| emit_graph6(&g)).collect();
        // masks 0, 1 = (0,1), 2 = (0,2)
        assert_eq!(first, vec!["B?", "B_", "BO"]);
    }

    #[test]
    fn canonical_examples() {
        let c5 = Graph::generate(Family::Cycle, 5).unwrap();
        assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&c5.complement()).unwrap());
        let k3_k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3_k1 = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(canonical_code(&k3_k1).unwrap(), canonical_code(&p3_k1).unwrap());
        let p4 = Graph::generate(Family::Path, 4).unwrap();
        assert_eq!(canonical_code(&p4).unwrap(), canonical_code(&p4.permute(&[2, 0, 3, 1])).unwrap());
        assert!(matches!(
            canonical_code(&Graph::empty(9).unwrap()),
            Err(CorpusError::CanonicalCapacity(9))
        ));
    }

    #[test]
    fn small_dedup_counts() {
        let count = |n| dedup_nonisomorphic(enumerate_labeled(n, Filter::All).unwrap()).count();
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 2);
        assert_eq!(count(3), 4);
        assert_eq!(count(4), 11);
    }

    #[test]
    fn filter_names() {
        assert_eq!("edges".parse::<Filter>().unwrap(), Filter::AtLeastOneEdge);
        assert_eq!("min-degree-one".parse::<Filter>().unwrap(), Filter::MinDegreeOne);
        assert!("some".parse::<Filter>().is_err());
    }

    #[test]
    fn missing_file_reports_path() {
        let spec = CorpusSpec::file("/nonexistent/corpus.g6", Filter::All);
        let err = spec.graphs().err().unwrap();
        assert!(err.to_string().contains("/nonexistent/corpus.g6"));
    }

    #[test]
    fn empty_claim_list_rejected() {
        let spec = CorpusSpec::exhaustive(3, Filter::All);
        assert!(matches!(
            audit_corpus(&spec, &AuditOptions::new(vec![], 1)),
            Err(CorpusError::NoClaims)
        ));
    }

    #[test]
    fn summary_counts_are_row_sums() {
        let spec = CorpusSpec::exhaustive(4, Filter::All);
        let report = audit_corpus(&spec, &AuditOptions::new(ClaimId::ALL.to_vec(), 2)).unwrap();
        assert_eq!(report.rows.len(), 64);
        assert_eq!(report.summary.graphs, 64);
        for (i, t) in report.summary.claims.iter().enumerate() {
            let col = |s: Status| report.rows.iter().filter(|r| r.outcomes[i].status == s).count() as u64;
            assert_eq!((t.holds, t.violated, t.not_applicable), (col(Status::Holds), col(Status::Violated), col(Status::NotApplicable)));
        }
        let v: u64 = report.summary.claims.iter().map(|t| t.violated).sum();
        assert_eq!(v, report.summary.violations);
        assert_eq!(report.counterexamples.len() as u64, v);
    }
}
