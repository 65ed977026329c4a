//! Command-line frontend: analysis, family generation, fast recognition,
//! census scans, the clique-gluing reduction, and subdivision search.
//!
//! Output contract: machine-readable JSON on stdout, diagnostics on stderr.
//! Exit codes: 0 on success, 1 when a requested check fails (a theorem scan
//! with violations, `recognize --expect` on a non-critical graph, a reduce
//! run whose two sides disagree), 2 for usage or input errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chromastab::families::{DPattern, FamilyParams, FamilyTag};
use chromastab::graph::{parse_edge_list, Edge, Graph};
use chromastab::harness::{
    enumerate_small_graphs, scan_graph6_lines_detailed, AnalyzedRow, ScanChecks, ScanReport,
    MAX_BUILTIN_ENUMERATION_ORDER,
};
use chromastab::stability::CriticalityRecord;
use chromastab::subdivision::{find_any_pattern, find_subdivision, PatternKind};
use chromastab::{
    classify_family, parse_graph6, recognize_32_critical_fast, verify_reduction, verify_theorem1,
    write_graph6,
};

#[derive(Parser)]
#[command(
    name = "chromastab",
    version,
    about = "Exact chromatic edge-stability analysis of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi, the edge-stability number, criticality, the odd-cycle
    /// census, and family membership of one graph.
    Analyze(AnalyzeArgs),
    /// Build a member of one of the five families from its parameters.
    Generate(GenerateArgs),
    /// Fast (3,2)-criticality recognition via 2-coloring checks.
    Recognize(RecognizeArgs),
    /// Analyze a stream of graphs and verify the structural theorems.
    Scan(ScanArgs),
    /// Glue a k-clique to a vertex and check the criticality equivalence.
    Reduce(ReduceArgs),
    /// Search for subdivisions of the four critical-graph patterns.
    Subdivision(SubdivisionArgs),
}

/// Graph source shared by the single-graph commands; precedence is
/// `--g6`, then `--file`, then standard input. Files and stdin may hold
/// either a graph6 value or an edge list ("n m" header, one "u v" per
/// line); the format is detected from the first character.
#[derive(Args)]
struct GraphInput {
    /// graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File with a graph6 value or an edge list.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        if let Some(text) = &self.g6 {
            return Ok(parse_graph6(text)?);
        }
        let text = match &self.file {
            Some(path) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            None => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
                buf
            }
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            bail!("empty graph input");
        }
        // graph6 bytes start at '?' (63); an edge list starts with a digit.
        if trimmed.as_bytes()[0].is_ascii_digit() {
            Ok(parse_edge_list(trimmed)?)
        } else {
            Ok(parse_graph6(trimmed)?)
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family to build: A, B, C, D, or E.
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    /// Family parameters: "k,l" for A and B; four path lengths for C; six
    /// path lengths for D (parity pattern inferred); "len:offset" pairs for
    /// E, e.g. "4:1,4:2".
    #[arg(long, visible_alias = "lengths")]
    params: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
    #[value(name = "E")]
    E,
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Exit with status 1 unless the graph is (3,2)-critical.
    #[arg(long)]
    expect: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan the built-in census of all isolate-free graphs with at most
    /// this many vertices (at most 8) instead of reading a stream.
    #[arg(long)]
    max_n: Option<usize>,
    /// Restrict the built-in census to connected graphs.
    #[arg(long, requires = "max_n")]
    connected_only: bool,
    /// graph6 stream, one graph per line; stdin when neither this nor
    /// --max-n is given.
    #[arg(long, conflicts_with = "max_n")]
    file: Option<PathBuf>,
    /// Checks to run (repeatable); everything runs when omitted.
    #[arg(long = "check", value_enum)]
    checks: Vec<CheckArg>,
    /// Worker threads for the per-graph analysis.
    #[arg(long, env = "CHROMASTAB_JOBS")]
    jobs: Option<usize>,
    /// Also write one CSV row per analyzed graph to this path.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Theorem1,
    Theorem5,
    Refinements,
    Lemmas,
    Prop9,
    Problem1,
    All,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Vertex of the input graph the clique is glued onto.
    #[arg(long)]
    vertex: usize,
    /// Clique order (at least 3).
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct SubdivisionArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Search for one specific pattern instead of the first of the four.
    #[arg(long, value_enum)]
    pattern: Option<PatternArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    K2_4,
    K4,
    K3_221,
    C4_2121,
}

impl From<PatternArg> for PatternKind {
    fn from(p: PatternArg) -> PatternKind {
        match p {
            PatternArg::K2_4 => PatternKind::K2_4,
            PatternArg::K4 => PatternKind::K4,
            PatternArg::K3_221 => PatternKind::K3_221,
            PatternArg::C4_2121 => PatternKind::C4_2121,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Recognize(args) => cmd_recognize(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Subdivision(args) => cmd_subdivision(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeOutput {
    graph6: String,
    n: usize,
    m: usize,
    chi: usize,
    es: Option<usize>,
    witness_set: Option<Vec<Edge>>,
    critical: bool,
    kl: Option<(usize, usize)>,
    odd_cycles: OddCyclesOut,
    families: Vec<&'static str>,
}

#[derive(Serialize)]
struct OddCyclesOut {
    odd_count: usize,
    total_count: usize,
    saturated: bool,
}

impl AnalyzeOutput {
    fn from_record(g: &Graph, record: CriticalityRecord) -> Result<Self> {
        let (stripped, _) = g.without_isolates();
        let families = classify_family(&stripped)
            .into_iter()
            .map(|t| t.as_str())
            .collect();
        Ok(AnalyzeOutput {
            graph6: write_graph6(g)?,
            n: g.n(),
            m: g.edge_count(),
            chi: record.chi,
            es: record.es,
            witness_set: record.witness_set,
            critical: record.is_critical,
            kl: record.k_l,
            odd_cycles: OddCyclesOut {
                odd_count: record.odd_cycles.odd_count,
                total_count: record.odd_cycles.total_count,
                saturated: record.odd_cycles.saturated,
            },
            families,
        })
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let g = args.input.load()?;
    let record = chromastab::analyze(&g);
    print_json(&AnalyzeOutput::from_record(&g, record)?)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .with_context(|| format!("bad parameter {tok:?}"))
        })
        .collect()
}

fn parse_family_params(family: FamilyArg, text: &str) -> Result<FamilyParams> {
    match family {
        FamilyArg::A | FamilyArg::B => {
            let vals = parse_usize_list(text)?;
            let [k, l] = vals[..] else {
                bail!("families A and B take two half-lengths, e.g. --params 1,2");
            };
            Ok(match family {
                FamilyArg::A => FamilyParams::A { k, l },
                _ => FamilyParams::B { k, l },
            })
        }
        FamilyArg::C => {
            let vals = parse_usize_list(text)?;
            let [l1, l2, l3, l4] = vals[..] else {
                bail!("family C takes four path lengths, e.g. --params 1,3,2,2");
            };
            Ok(FamilyParams::C { lengths: [l1, l2, l3, l4] })
        }
        FamilyArg::D => {
            let vals = parse_usize_list(text)?;
            let [a, b, c, d, e, f] = vals[..] else {
                bail!("family D takes six path lengths, e.g. --params 1,1,1,1,1,3");
            };
            let lengths = [a, b, c, d, e, f];
            let Some(pattern) = FamilyParams::infer_d_pattern(&lengths) else {
                bail!(
                    "the six lengths fit no parity pattern: need all odd (not all 1), \
                     three odd on a triangle, or two odd on opposite edges"
                );
            };
            Ok(FamilyParams::D { lengths, pattern })
        }
        FamilyArg::E => {
            let cycles = text
                .split(',')
                .map(|tok| {
                    let (len, off) = tok
                        .trim()
                        .split_once(':')
                        .with_context(|| format!("bad cycle {tok:?}, expected len:offset"))?;
                    Ok((
                        len.parse::<usize>().with_context(|| format!("bad length {len:?}"))?,
                        off.parse::<usize>().with_context(|| format!("bad offset {off:?}"))?,
                    ))
                })
                .collect::<Result<Vec<(usize, usize)>>>()?;
            Ok(FamilyParams::E { cycles })
        }
    }
}

#[derive(Serialize)]
struct GenerateOutput {
    family: FamilyTag,
    n: usize,
    m: usize,
    graph6: String,
    d_pattern: Option<DPattern>,
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode> {
    let params = parse_family_params(args.family, &args.params)?;
    let g = chromastab::generate(&params)?;
    let d_pattern = match &params {
        FamilyParams::D { pattern, .. } => Some(*pattern),
        _ => None,
    };
    print_json(&GenerateOutput {
        family: params.tag(),
        n: g.n(),
        m: g.edge_count(),
        graph6: write_graph6(&g)?,
        d_pattern,
    })?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RecognizeOutput {
    graph6: String,
    critical_32: bool,
}

fn cmd_recognize(args: RecognizeArgs) -> Result<ExitCode> {
    let g = args.input.load()?;
    let critical_32 = recognize_32_critical_fast(&g);
    print_json(&RecognizeOutput {
        graph6: write_graph6(&g)?,
        critical_32,
    })?;
    if args.expect && !critical_32 {
        eprintln!("graph is not (3,2)-critical");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn scan_checks(args: &[CheckArg]) -> ScanChecks {
    if args.is_empty() || args.contains(&CheckArg::All) {
        return ScanChecks::default();
    }
    let mut checks = ScanChecks::none();
    for c in args {
        match c {
            CheckArg::Theorem1 => checks.theorem1 = true,
            CheckArg::Theorem5 => checks.theorem5 = true,
            CheckArg::Refinements => checks.refinements = true,
            CheckArg::Lemmas => checks.lemmas = true,
            CheckArg::Prop9 => checks.prop9 = true,
            CheckArg::Problem1 => checks.problem1 = true,
            CheckArg::All => unreachable!("handled above"),
        }
    }
    checks
}

fn scan_failed(report: &ScanReport) -> bool {
    report.theorem1_holds == Some(false)
        || report.theorem5_holds == Some(false)
        || report.theorem2_holds == Some(false)
        || report.theorem10_holds == Some(false)
        || !report.lemma_violations.is_empty()
}

fn write_csv(path: &PathBuf, rows: &[AnalyzedRow]) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::BufWriter::new(
        std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    writeln!(out, "graph6,n,m,chi,es,critical,k,l,odd_cycles,saturated,families")?;
    for row in rows {
        let record = &row.record;
        let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
        let (k, l) = match record.k_l {
            Some((k, l)) => (k.to_string(), l.to_string()),
            None => (String::new(), String::new()),
        };
        let families: Vec<&str> = row.families.iter().map(|t| t.as_str()).collect();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.graph6,
            row.n,
            row.m,
            record.chi,
            opt(record.es),
            record.is_critical,
            k,
            l,
            record.odd_cycles.odd_count,
            record.odd_cycles.saturated,
            families.join(";")
        )?;
    }
    Ok(())
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode> {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let checks = scan_checks(&args.checks);

    let lines: Vec<String> = match (args.max_n, &args.file) {
        (Some(max_n), _) => {
            if max_n > MAX_BUILTIN_ENUMERATION_ORDER {
                bail!(
                    "--max-n is capped at {MAX_BUILTIN_ENUMERATION_ORDER} \
                     (feed larger orders as a graph6 stream)"
                );
            }
            let mut lines = Vec::new();
            for order in 1..=max_n {
                for g in enumerate_small_graphs(order, args.connected_only)? {
                    if (0..g.n()).all(|v| g.degree(v) > 0) {
                        lines.push(write_graph6(&g)?);
                    }
                }
            }
            lines
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(str::to_string)
            .collect(),
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf.lines()
                .filter(|l| !l.trim().is_empty())
                .map(str::to_string)
                .collect()
        }
    };

    let (mut report, rows) = scan_graph6_lines_detailed(&lines, &checks);

    // With the complete built-in census the theorem1 verdict can be
    // strengthened to full set equality against the enumerated families.
    if checks.theorem1 && !args.connected_only {
        if let Some(max_n) = args.max_n {
            let equality = verify_theorem1(max_n)?;
            report.theorem1_holds = Some(report.theorem1_holds == Some(true) && equality.holds);
        }
    }

    if let Some(path) = &args.csv {
        write_csv(path, &rows)?;
        eprintln!("wrote {} rows to {}", rows.len(), path.display());
    }
    print_json(&report)?;
    if scan_failed(&report) {
        eprintln!("scan checks failed");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(args: ReduceArgs) -> Result<ExitCode> {
    let g = args.input.load()?;
    let result = verify_reduction(&g, args.vertex, args.k)?;
    print_json(&result)?;
    if !result.equivalent {
        eprintln!("reduction equivalence failed; this indicates an implementation bug");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SubdivisionOutput {
    graph6: String,
    found: bool,
    pattern: Option<PatternKind>,
    branch_map: Option<Vec<usize>>,
    paths: Option<Vec<Vec<usize>>>,
}

fn cmd_subdivision(args: SubdivisionArgs) -> Result<ExitCode> {
    let g = args.input.load()?;
    let hit = match args.pattern {
        Some(p) => find_subdivision(&g, p.into()).map(|emb| (PatternKind::from(p), emb)),
        None => find_any_pattern(&g),
    };
    let out = match hit {
        Some((pattern, emb)) => SubdivisionOutput {
            graph6: write_graph6(&g)?,
            found: true,
            pattern: Some(pattern),
            branch_map: Some(emb.branch_map),
            paths: Some(emb.path_map),
        },
        None => SubdivisionOutput {
            graph6: write_graph6(&g)?,
            found: false,
            pattern: None,
            branch_map: None,
            paths: None,
        },
    };
    print_json(&out)?;
    Ok(ExitCode::SUCCESS)
}
