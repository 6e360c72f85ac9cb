//! `regdeg`: invariants of edge ideals, graph families, and `(reg, deg h)`
//! censuses from the command line.
//!
//! Exit codes: 0 success, 1 a verification found violations, 2 usage or
//! runtime error, 3 malformed input.

use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use regdeg::atlas::{
    asymptotics_probe, compute_census_checkpointed, convexity_probe, count_cw, enumerate_connected,
    lattice_cw, parse_points_csv, read_graph6, RdCensus, INTERNAL_LIMIT,
};
use regdeg::constructions::{
    build_complete_bipartite, build_cw, build_dr, build_g_abc, build_ribbon, build_star,
    build_star_triangle, pad_to_n, realize_cw, realize_rd, CwParams, CwSpec,
};
use regdeg::graph::{parse_edge_list, to_edge_list};
use regdeg::verify::{fresh_census, run_suite, Suite, VerifyOptions};
use regdeg::{Error, Graph, InvariantRecord};

const CACHE_ENV: &str = "REGDEG_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "regdeg",
    version,
    about = "Regularity and h-polynomial degree of edge ideals"
)]
struct Cli {
    /// Worker threads for census runs (default: all logical cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Indent JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// JSON invariant record for each input graph
    Invariants(InvariantsArgs),
    /// Build a named graph family
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Graph6, global = true)]
        format: Format,
    },
    /// Connected graphs on n vertices, one graph6 per line
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// (reg, deg h) census over all connected graphs on n vertices
    Census(CensusArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Closed-form count of Cameron-Walker pairs
    Count(CountArgs),
    /// r,d,cw scatter data from a stored census
    PlotData {
        #[arg(long)]
        n: usize,
        /// Directory holding the census files (default: $REGDEG_CACHE_DIR or .)
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Input file, or - for stdin
    #[arg(default_value = "-")]
    input: String,
    /// Graph6 string given inline instead of an input file
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Subcommand)]
enum Family {
    /// r disjoint edges
    Dr { r: usize },
    /// two triangles sharing a vertex
    Ribbon,
    /// K_{1,k}
    Star { k: usize },
    /// k triangles sharing a vertex
    #[command(name = "startriangle", alias = "star-triangle")]
    StarTriangle { k: usize },
    /// K_{a,b}
    Kab { a: usize, b: usize },
    /// Cameron-Walker graph from a JSON spec {"core_edges", "s", "t"}
    Cw { spec: String },
    /// G_{a,b,c}
    Gabc { a: usize, b: usize, c: usize },
    /// connected graph with pair (r, d), optionally padded to n vertices
    Realize {
        r: usize,
        d: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// n-vertex Cameron-Walker graph with pair (r, d)
    RealizeCw { r: usize, d: usize, n: usize },
    /// pad a graph6 graph to n vertices keeping its pair
    Pad { graph6: String, n: usize },
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    /// Read graph6 from this file (- for stdin) instead of enumerating
    #[arg(long)]
    input: Option<String>,
    /// Where to write rd_census_n<N>.csv and cw_census_n<N>.csv
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Required for the long n >= 9 run of the built-in generator
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma2.1, lemma2.2, lemma2.3, lemma3.3, thm3.6, thm4.3, thm5.1, thm5.2, thm5.4
    id: String,
    /// Vertex range, `A..B` (inclusive) or a single `N`
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Allow census-based suites to run n >= 9
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct CountArgs {
    /// `N` or `A..B`
    #[arg(long)]
    n: String,
    /// Also print the ratio table against n^2 and the lattice proxies
    #[arg(long)]
    asymptotics: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if is_parse_error(&e) {
            Failure::Parse(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn is_parse_error(e: &Error) -> bool {
    match e {
        Error::Graph6 { .. } | Error::EdgeList { .. } => true,
        Error::AtLine { source, .. } | Error::InGraph { source, .. } => is_parse_error(source),
        _ => false,
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    let out = Output { pretty: cli.pretty };
    match &cli.command {
        Command::Invariants(args) => invariants(args, &out),
        Command::Construct { family, format } => construct(family, *format),
        Command::Enumerate { n } => {
            let mut stdout = io::stdout().lock();
            for g in enumerate_connected(*n)? {
                writeln!(stdout, "{}", g.to_graph6())?;
            }
            Ok(())
        }
        Command::Census(args) => census(args, &out),
        Command::Verify(args) => verify(args, &out),
        Command::Count(args) => count(args, &out),
        Command::PlotData { n, dir } => {
            let dir = dir.clone().unwrap_or_else(default_dir);
            let census = load_census(&dir, *n)?;
            print!("{}", census.plot_csv());
            Ok(())
        }
    }
}

struct Output {
    pretty: bool,
}

impl Output {
    fn json<T: Serialize>(&self, value: &T) {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        };
        println!("{}", text.expect("values serialize"));
    }
}

fn read_input(path: &str) -> CliResult<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn invariants(args: &InvariantsArgs, out: &Output) -> CliResult {
    let graphs = match (&args.graph6, args.format) {
        (Some(s), _) => vec![Graph::from_graph6(s)?],
        (None, Format::Edgelist) => vec![parse_edge_list(&read_input(&args.input)?)?],
        (None, Format::Graph6) => read_graph6(BufReader::new(read_input(&args.input)?.as_bytes()))
            .collect::<regdeg::Result<Vec<_>>>()?,
    };
    for g in &graphs {
        let record = InvariantRecord::compute(g).map_err(|e| Error::InGraph {
            graph6: g.to_graph6(),
            source: Box::new(e),
        })?;
        out.json(&record);
    }
    Ok(())
}

fn construct(family: &Family, format: Format) -> CliResult {
    let g = match family {
        Family::Dr { r } => build_dr(*r)?,
        Family::Ribbon => build_ribbon(),
        Family::Star { k } => build_star(*k)?,
        Family::StarTriangle { k } => build_star_triangle(*k)?,
        Family::Kab { a, b } => build_complete_bipartite(*a, *b)?,
        Family::Cw { spec } => {
            let spec: CwSpec =
                serde_json::from_str(spec).map_err(|e| Failure::Parse(format!("spec: {e}")))?;
            build_cw(&spec)?
        }
        Family::Gabc { a, b, c } => build_g_abc(CwParams::new(*a, *b, *c)?)?,
        Family::Realize { r, d, n } => {
            let g = realize_rd(*r, *d)?;
            match n {
                Some(n) => pad_to_n(&g, *n)?,
                None => g,
            }
        }
        Family::RealizeCw { r, d, n } => realize_cw(*r, *d, *n)?,
        Family::Pad { graph6, n } => pad_to_n(&Graph::from_graph6(graph6)?, *n)?,
    };
    match format {
        Format::Graph6 => println!("{}", g.to_graph6()),
        Format::Edgelist => print!("{}", to_edge_list(&g)),
    }
    Ok(())
}

fn default_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from("."), PathBuf::from)
}

fn census_paths(dir: &Path, n: usize) -> (PathBuf, PathBuf) {
    (
        dir.join(format!("rd_census_n{n}.csv")),
        dir.join(format!("cw_census_n{n}.csv")),
    )
}

fn gate(n: usize, allow_large: bool) -> CliResult {
    if n > INTERNAL_LIMIT {
        return Err(Failure::Usage(format!(
            "the built-in generator stops at n = {INTERNAL_LIMIT}; pipe graph6 in with --input"
        )));
    }
    if n >= 9 && !allow_large {
        return Err(Failure::Usage(format!(
            "n = {n} enumerates hundreds of thousands of graphs; pass --allow-large"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct CensusSummary<'a> {
    n: usize,
    total_graphs: u64,
    cw_graphs: u64,
    points: usize,
    cw_points: usize,
    violations: usize,
    /// every row and column of the realised set is an interval (diagnostic)
    convex: bool,
    census_csv: Option<&'a Path>,
    cw_csv: Option<&'a Path>,
}

fn census(args: &CensusArgs, out: &Output) -> CliResult {
    let n = args.n;
    let graphs = match &args.input {
        Some(path) => {
            let reader: Box<dyn BufRead> = if path == "-" {
                Box::new(BufReader::new(io::stdin()))
            } else {
                Box::new(BufReader::new(
                    fs::File::open(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
                ))
            };
            read_graph6(reader).collect::<regdeg::Result<Vec<_>>>()?
        }
        None => {
            gate(n, args.allow_large)?;
            enumerate_connected(n)?
        }
    };
    let checkpoint = std::env::var_os(CACHE_ENV).map(|dir| {
        let dir = PathBuf::from(dir);
        let _ = fs::create_dir_all(&dir);
        dir.join(format!("census_n{n}.checkpoint.json"))
    });
    let c = compute_census_checkpointed(n, &graphs, checkpoint.as_deref())?;
    let dir = args.out_dir.clone().unwrap_or_else(default_dir);
    fs::create_dir_all(&dir)?;
    let (rd_path, cw_path) = census_paths(&dir, n);
    fs::write(&rd_path, c.to_csv())?;
    fs::write(&cw_path, c.cw_csv())?;
    out.json(&CensusSummary {
        n,
        total_graphs: c.total_graphs,
        cw_graphs: c.cw_graphs,
        points: c.points.len(),
        cw_points: c.cw_points.len(),
        violations: c.violations.len(),
        convex: convexity_probe(&c).convex(),
        census_csv: Some(&rd_path),
        cw_csv: Some(&cw_path),
    });
    for v in &c.violations {
        eprintln!("violation: {}: {}", v.graph6, v.reason);
    }
    if c.violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn load_census(dir: &Path, n: usize) -> CliResult<RdCensus> {
    let (rd_path, cw_path) = census_paths(dir, n);
    let read = |p: &Path| {
        fs::read_to_string(p).map_err(|e| {
            Failure::Usage(format!(
                "no census for n = {n} at {} ({e}); run `regdeg census --n {n}` first",
                p.display()
            ))
        })
    };
    let (_, points) = parse_points_csv(&read(&rd_path)?)?;
    let (_, cw_points) = parse_points_csv(&read(&cw_path)?)?;
    let mut c = RdCensus::empty(n);
    c.total_graphs = points.iter().map(|p| p.multiplicity).sum();
    c.cw_graphs = cw_points.iter().map(|p| p.multiplicity).sum();
    c.points = points;
    c.cw_points = cw_points;
    Ok(c)
}

fn parse_range(text: &str) -> CliResult<(usize, usize)> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| Failure::Usage(format!("bad vertex count {s:?}: {e}")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(text)?, num(text)?),
    };
    if lo > hi {
        return Err(Failure::Usage(format!("empty range {text:?}")));
    }
    Ok((lo, hi))
}

fn verify(args: &VerifyArgs, out: &Output) -> CliResult {
    let suite: Suite = args.id.parse()?;
    let mut opts = VerifyOptions::defaults_for(suite);
    if let Some(range) = &args.n {
        (opts.n_min, opts.n_max) = parse_range(range)?;
    }
    if let Some(m) = args.n_max {
        opts.n_max = m;
    }
    opts.samples = args.samples.unwrap_or(opts.samples);
    opts.seed = args.seed.unwrap_or(opts.seed);
    if suite.uses_census() {
        gate(opts.n_max, args.allow_large)?;
    }
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let mut source = |n: usize| -> regdeg::Result<RdCensus> {
        // stored CSVs drop per-graph violations, which these two suites read
        if let (Some(dir), false) = (&cache, matches!(suite, Suite::Lemma2_1 | Suite::Thm5_2)) {
            if let Ok(c) = load_census(dir, n) {
                return Ok(c);
            }
        }
        fresh_census(n)
    };
    let report = run_suite(suite, &opts, &mut source)?;
    eprintln!(
        "{}: {} ({} cases, {} failures)",
        report.suite,
        if report.passed { "PASS" } else { "FAIL" },
        report.checked,
        report.failure_count
    );
    for f in &report.failures {
        eprintln!("  {f}");
    }
    out.json(&report);
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    count: u64,
    lattice_points: usize,
}

fn count(args: &CountArgs, out: &Output) -> CliResult {
    let (lo, hi) = parse_range(&args.n)?;
    if lo < 5 {
        return Err(Failure::Usage("the count is defined for n >= 5".into()));
    }
    if args.asymptotics {
        let rows: Vec<_> = asymptotics_probe(hi)
            .into_iter()
            .filter(|r| r.n >= lo)
            .collect();
        out.json(&rows);
        return Ok(());
    }
    let rows: Vec<_> = (lo..=hi)
        .map(|n| CountRow {
            n,
            count: count_cw(n),
            lattice_points: lattice_cw(n).len(),
        })
        .collect();
    let agree = rows.iter().all(|r| r.count == r.lattice_points as u64);
    out.json(&rows);
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
