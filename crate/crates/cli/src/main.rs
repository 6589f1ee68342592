mod edges;

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use strength_core::claims::{evaluate_all, parse_claim_list, ClaimId, ClaimOutcome, StrValue};
use strength_core::corpus::{run_audit, AuditOptions, CorpusSpec, Dedup, Filter, JsonlSink, SCHEMA_VERSION};
use strength_core::invariants::{Edge, InvariantBundle, InvariantError};
use strength_core::strength::{strength_exact, strength_via_fk, FkEmbedding, Numbering, EXACT_CAP};
use strength_core::{emit_graph6, parse_graph6, Family, Graph, VertexSet};

/// Graph strength, domination and covering numbers, and claim audits.
#[derive(Parser)]
#[command(name = "strength", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of one graph.
    Compute(ComputeArgs),
    /// Evaluate claims over a corpus of graphs.
    Audit(AuditArgs),
    /// Generate a member of a standard family.
    Gen(GenArgs),
    /// Convert between graph6 and edge lists, one graph per line.
    Convert(ConvertArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["graph6", "edges"])))]
struct ComputeArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// Vertex count followed by 0-based edges, e.g. `--edges 3 0-1 1-2`.
    #[arg(long, num_args = 1.., value_name = "N U-V", allow_hyphen_values = true)]
    edges: Option<Vec<String>>,
    /// Skip the exact-solver cross-check on small graphs.
    #[arg(long)]
    no_crosscheck: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("corpus").required(true).args(["n", "file"])))]
struct AuditArgs {
    /// Every labeled graph of this order.
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=7))]
    n: Option<u8>,
    /// graph6 file, one token per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// `all` or a comma list such as `C1,C3`.
    #[arg(long, default_value = "all")]
    claims: String,
    /// all, min-degree-one or edges.
    #[arg(long, default_value = "all")]
    filter: String,
    #[arg(long)]
    workers: Option<usize>,
    /// Keep one graph per isomorphism class (order <= 8).
    #[arg(long)]
    dedup: bool,
    /// Write per-graph rows as JSON lines.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write violations as JSON lines.
    #[arg(long)]
    counterexamples: Option<PathBuf>,
    #[arg(long)]
    allow_violations: bool,
    /// Leave wall time out of the summary.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Complete,
    Cycle,
    Path,
    Star,
    Empty,
    Fk,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Path => Family::Path,
            FamilyArg::Star => Family::Star,
            FamilyArg::Empty => Family::Empty,
            FamilyArg::Fk => Family::Fk,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilyArg,
    /// Order of the graph (`--k` for F_k reads the same).
    #[arg(long, visible_alias = "k")]
    n: usize,
    #[arg(long, default_value = "graph6")]
    emit: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["from_edges", "to_edges"])))]
struct ConvertArgs {
    /// Read edge lists, write graph6.
    #[arg(long)]
    from_edges: bool,
    /// Read graph6, write edge lists.
    #[arg(long)]
    to_edges: bool,
    /// Input file; standard input when absent.
    input: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Violations(u64),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Audit(a) => audit(a),
        Command::Gen(a) => gen(a),
        Command::Convert(a) => convert(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violations(v)) => {
            eprintln!("{v} violation(s) found");
            ExitCode::from(2)
        }
    }
}

fn write_stdout(text: &str) -> Outcome {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(format!("standard output: {e}").into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    write_stdout(&(text + "\n"))
}

#[derive(Serialize)]
struct ComputeReport {
    schema_version: u32,
    graph6: String,
    n: usize,
    edges: usize,
    delta: usize,
    gamma: Option<usize>,
    alpha: Option<usize>,
    alpha1: Option<usize>,
    beta: Option<usize>,
    beta1: Option<usize>,
    #[serde(rename = "str")]
    strength: StrValue,
    method: Option<&'static str>,
    str_exact: Option<usize>,
    k_max: Option<usize>,
    numbering: Option<Numbering>,
    fk_witness: Option<FkEmbedding>,
    dominating_set: Option<VertexSet>,
    independent_set: Option<VertexSet>,
    vertex_cover: Option<VertexSet>,
    matching: Option<Vec<Edge>>,
    edge_cover: Option<Vec<Edge>>,
    claims: Vec<ClaimOutcome>,
}

const CROSSCHECK_CAP: usize = 10;

fn compute(a: ComputeArgs) -> Outcome {
    let g = match (&a.graph6, &a.edges) {
        (Some(t), _) => parse_graph6(t).map_err(|e| format!("graph6 {t:?}: {e}"))?,
        (None, Some(tokens)) => edges::parse_edge_tokens(tokens)?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let n = g.order();
    let bundle = match InvariantBundle::compute(&g) {
        Ok(b) => Some(b),
        Err(InvariantError::Capacity { .. }) => None,
        Err(e) => return Err(e.to_string().into()),
    };

    let (cert, method) = if !g.has_edges() {
        (None, None)
    } else if g.min_degree() >= 1 {
        (Some(strength_via_fk(&g).map_err(|e| e.to_string())?), Some("fk"))
    } else if n <= EXACT_CAP {
        (Some(strength_exact(&g).map_err(|e| e.to_string())?), Some("exact"))
    } else {
        (None, None)
    };
    let mut str_exact = None;
    if let (Some(c), Some("fk")) = (&cert, method) {
        if !a.no_crosscheck && n <= CROSSCHECK_CAP {
            let exact = strength_exact(&g).map_err(|e| e.to_string())?.value;
            if exact != c.value {
                return Err(format!("cross-check failed: F_k route gives {}, exact search gives {exact}", c.value).into());
            }
            str_exact = Some(exact);
        }
    }
    let strength = match (&cert, g.has_edges()) {
        (Some(c), _) => StrValue::Finite(c.value),
        (None, false) => StrValue::Infinite,
        (None, true) => StrValue::Capacity,
    };
    let claims = evaluate_all(&g).map_err(|e| e.to_string())?;

    let b = bundle.as_ref();
    print_json(&ComputeReport {
        schema_version: SCHEMA_VERSION,
        graph6: emit_graph6(&g),
        n,
        edges: g.edge_count(),
        delta: g.min_degree(),
        gamma: b.map(|b| b.gamma),
        alpha: b.map(|b| b.alpha),
        alpha1: b.and_then(|b| b.alpha1),
        beta: b.map(|b| b.beta),
        beta1: b.map(|b| b.beta1),
        strength,
        method,
        str_exact,
        k_max: cert.as_ref().and_then(|c| c.k_max),
        numbering: cert.as_ref().map(|c| c.numbering.clone()),
        fk_witness: cert.as_ref().and_then(|c| c.fk_witness.clone()),
        dominating_set: b.map(|b| b.dominating_set),
        independent_set: b.map(|b| b.independent_set),
        vertex_cover: b.map(|b| b.vertex_cover),
        matching: b.map(|b| b.matching.clone()),
        edge_cover: b.and_then(|b| b.edge_cover.clone()),
        claims,
    })
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, String> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn audit(a: AuditArgs) -> Outcome {
    let claims: Vec<ClaimId> = parse_claim_list(&a.claims).map_err(|e| e.to_string())?;
    let filter: Filter = a.filter.parse().map_err(|e| format!("{e}"))?;
    let mut spec = match (a.n, &a.file) {
        (Some(n), _) => CorpusSpec::exhaustive(n as usize, filter),
        (None, Some(path)) => CorpusSpec::file(path, filter),
        (None, None) => unreachable!("clap requires one corpus"),
    };
    if a.dedup {
        spec = spec.with_dedup(Dedup::UpToIsomorphism);
    }
    let workers = a
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    if workers == 0 {
        return Err("--workers must be at least 1".to_string().into());
    }
    let mut options = AuditOptions::new(claims, workers);
    options.timing = !a.no_timing;

    let mut sink = JsonlSink {
        rows: a.report.as_ref().map(create).transpose()?,
        counterexamples: a.counterexamples.as_ref().map(create).transpose()?,
    };
    let summary = run_audit(&spec, &options, &mut sink).map_err(|e| e.to_string())?;
    for w in [sink.rows.as_mut(), sink.counterexamples.as_mut()].into_iter().flatten() {
        w.flush().map_err(|e| e.to_string())?;
    }

    eprintln!("audited {} graphs", summary.graphs);
    for t in &summary.claims {
        eprintln!(
            "  {:<4} holds {:>7}  violated {:>7}  not applicable {:>7}",
            t.claim, t.holds, t.violated, t.not_applicable
        );
    }
    print_json(&summary)?;
    if summary.violations > 0 && !a.allow_violations {
        return Err(Failure::Violations(summary.violations));
    }
    Ok(())
}

fn gen(a: GenArgs) -> Outcome {
    let g = Graph::generate(a.family.into(), a.n).map_err(|e| e.to_string())?;
    write_stdout(&(render(&g, a.emit) + "\n"))
}

fn render(g: &Graph, f: Format) -> String {
    match f {
        Format::Graph6 => emit_graph6(g),
        Format::Edges => edges::format_edges(g),
    }
}

fn convert(a: ConvertArgs) -> Outcome {
    let reader: Box<dyn BufRead> = match &a.input {
        Some(path) => Box::new(io::BufReader::new(
            File::open(path).map_err(|e| format!("{}: {e}", path.display()))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    let name = a.input.as_ref().map_or("<stdin>".to_string(), |p| p.display().to_string());
    let mut out = String::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| format!("{name}: {e}"))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = if a.from_edges {
            edges::parse_edge_line(line)
        } else {
            parse_graph6(line).map_err(|e| e.to_string())
        }
        .map_err(|e| format!("{name}:{}: {e}", i + 1))?;
        out.push_str(&render(&g, if a.from_edges { Format::Graph6 } else { Format::Edges }));
        out.push('\n');
    }
    write_stdout(&out)
}
