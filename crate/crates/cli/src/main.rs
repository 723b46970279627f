//! `rprime`: exact pair numbers, greedy extraction and threshold searches
//! from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error,
//! 3 budget exceeded.

mod record;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rprime_core::claims::{claim_ids, run_claims};
use rprime_core::greedy::{greedy_pair_proof, greedy_pair_remark, VertexRule};
use rprime_core::{
    max_clique, max_independent, parse_graph6, rho_prime, search_threshold, search_threshold_score, w_prime_search,
    write_graph6, Error, Exec, Graph, ScoreKind, SearchOptions, Threshold, ThresholdKind, ThresholdStatus, VertexSet,
};

use record::{Query, ResultRecord, SCHEMA};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rprime",
    version,
    about = "Exact clique/independent-set pair numbers and Ramsey-type thresholds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clique number, independence number, pair number and greedy pairs of one graph.
    Rho(RhoArgs),
    /// Exhaustive threshold search with certificates.
    Search(SearchArgs),
    /// Reproduce the catalogue of exact values and inequalities.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct RhoArgs {
    /// graph6 string, or `-` to read it from stdin.
    #[arg(long, conflicts_with = "edges")]
    graph6: Option<String>,
    /// Edge list such as "0-1,1-2"; needs --n.
    #[arg(long, requires = "n")]
    edges: Option<String>,
    /// Vertex count for --edges.
    #[arg(long)]
    n: Option<usize>,
    /// Pivot rule for the greedy extractions.
    #[arg(long, value_enum, default_value_t = Rule::Lowest)]
    rule: Rule,
    /// Seed for `--rule random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Lowest,
    Degree,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchKind {
    Rprime,
    Ramsey,
    #[value(name = "rprime_m", alias = "rprime-m")]
    RprimeM,
    Wprime,
    Score,
}

impl SearchKind {
    fn name(self) -> &'static str {
        match self {
            SearchKind::Rprime => "rprime",
            SearchKind::Ramsey => "ramsey",
            SearchKind::RprimeM => "rprime_m",
            SearchKind::Wprime => "wprime",
            SearchKind::Score => "score",
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(value_enum)]
    kind: SearchKind,
    /// Target value.
    #[arg(long)]
    n: u64,
    /// Number of colors (ramsey with m > 2 searches the multicolor number).
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Colors counted by `score` (the j largest contributions).
    #[arg(long)]
    j: Option<usize>,
    /// Score shape for `score`.
    #[arg(long, value_enum, default_value_t = ScoreArg::Clique)]
    score: ScoreArg,
    /// Worker threads (default: machine parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Largest instance space scanned per probed size.
    #[arg(long, default_value_t = rprime_core::search::DEFAULT_BUDGET)]
    budget: u64,
    /// JSON-lines result cache.
    #[arg(long, default_value = "results.jsonl")]
    cache: PathBuf,
    /// Do not write the cache.
    #[arg(long)]
    no_cache: bool,
    /// Reuse a cached result for the same query instead of recomputing.
    #[arg(long)]
    resume: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScoreArg {
    Clique,
    Cycle,
    Path,
}

impl From<ScoreArg> for ScoreKind {
    fn from(s: ScoreArg) -> Self {
        match s {
            ScoreArg::Clique => ScoreKind::CliqueSize,
            ScoreArg::Cycle => ScoreKind::LongestCycle,
            ScoreArg::Path => ScoreKind::LongestPath,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single check by id.
    #[arg(long)]
    only: Option<String>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn exec_for(threads: Option<usize>) -> Exec {
    threads.map_or_else(Exec::default, Exec::with_threads)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Rho(args) => cmd_rho(args),
        Command::Search(args) => cmd_search(args),
        Command::VerifyPaper(args) => cmd_verify(args),
    }
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn parse_edges(text: &str, n: usize) -> Result<Graph, String> {
    let mut edges = Vec::new();
    for (k, item) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| format!("edge {k} ({item:?}): expected u-v"))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| format!("edge {k} ({item:?}): {e}"))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

fn read_graph(args: &RhoArgs) -> Result<Graph, String> {
    match (&args.graph6, &args.edges) {
        (Some(text), _) => {
            let text = if text == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
                buf
            } else {
                text.clone()
            };
            parse_graph6(text.trim_end_matches(['\n', '\r'])).map_err(|e| e.to_string())
        }
        (None, Some(edges)) => parse_edges(edges, args.n.unwrap_or(0)),
        (None, None) => Err("one of --graph6 or --edges is required".into()),
    }
}

fn fmt_set(s: VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

fn cmd_rho(args: RhoArgs) -> ExitCode {
    let start = Instant::now();
    let g = match read_graph(&args) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let rule = match args.rule {
        Rule::Lowest => VertexRule::LowestIndex,
        Rule::Degree => VertexRule::HighestDegree,
        Rule::Random => VertexRule::SeededRandom(args.seed),
    };
    let (omega, a) = max_clique(&g);
    let (alpha, b) = max_independent(&g);
    let w = rho_prime(&g);
    let proof = greedy_pair_proof(&g, rule).ok();
    let remark = greedy_pair_remark(&g, rule).ok();
    let graph6 = write_graph6(&g);

    if args.json {
        let greedy = |r: &Option<(rprime_core::WitnessPair, rprime_core::GreedyTrace)>| match r {
            Some((w, t)) => json!({ "value": w.value, "a": w.a, "b": w.b, "trace": t }),
            None => serde_json::Value::Null,
        };
        let record = ResultRecord {
            schema: SCHEMA,
            query: Query {
                command: "rho".into(),
                kind: "rho".into(),
                n: None,
                m: None,
                j: None,
                score: None,
                graph6: Some(graph6.clone()),
            },
            value: w.value as u64,
            exhaustive: true,
            certificate: json!({
                "witness_graph6": graph6,
                "omega": omega,
                "alpha": alpha,
                "witness": w,
                "greedy_proof": greedy(&proof),
                "greedy_remark": greedy(&remark),
                "seed": args.seed,
            }),
            engine_version: rprime_core::ENGINE_VERSION.into(),
            wall_time_ms: start.elapsed().as_millis() as u64,
        };
        println!("{}", record.to_json_line());
        return ExitCode::SUCCESS;
    }

    println!("graph: {} vertices, {} edges, graph6 {graph6}", g.n(), g.edge_count());
    println!("omega = {omega}  A = {}", fmt_set(a));
    println!("alpha = {alpha}  B = {}", fmt_set(b));
    println!("rho' = {}", w.value);
    match &proof {
        Some((p, _)) => println!(
            "greedy (recursion): {}  A = {}  B = {}",
            p.value,
            fmt_set(p.a),
            fmt_set(p.b)
        ),
        None => println!("greedy (recursion): n/a"),
    }
    match &remark {
        Some((p, _)) => println!(
            "greedy (loop form):  {}  A = {}  B = {}",
            p.value,
            fmt_set(p.a),
            fmt_set(p.b)
        ),
        None => println!("greedy (loop form):  n/a (needs 2 vertices)"),
    }
    if matches!(args.rule, Rule::Random) {
        println!("seed = {}", args.seed);
    }
    ExitCode::SUCCESS
}

fn search_query(args: &SearchArgs) -> Query {
    Query {
        command: "search".into(),
        kind: args.kind.name().into(),
        n: Some(args.n),
        m: (args.kind != SearchKind::Rprime).then_some(args.m),
        j: (args.kind == SearchKind::Score).then(|| args.j.unwrap_or(args.m)),
        score: (args.kind == SearchKind::Score).then(|| {
            serde_json::to_value(ScoreKind::from(args.score))
                .unwrap()
                .as_str()
                .unwrap()
                .to_string()
        }),
        graph6: None,
    }
}

fn run_search(args: &SearchArgs, opts: &SearchOptions) -> rprime_core::Result<Threshold> {
    match args.kind {
        SearchKind::Rprime => search_threshold(ThresholdKind::RPrime, args.n, 2, opts),
        SearchKind::Ramsey if args.m == 2 => search_threshold(ThresholdKind::Ramsey, args.n, 2, opts),
        SearchKind::Ramsey => search_threshold(ThresholdKind::RamseyM, args.n, args.m, opts),
        SearchKind::RprimeM => search_threshold(ThresholdKind::RPrimeM, args.n, args.m, opts),
        SearchKind::Wprime => w_prime_search(args.m, args.n, opts),
        SearchKind::Score => search_threshold_score(args.score.into(), args.m, args.j.unwrap_or(args.m), args.n, opts),
    }
}

fn print_threshold(query: &Query, t: &Threshold) {
    let status = match t.status {
        ThresholdStatus::Exact => "exact".to_string(),
        ThresholdStatus::BoundOnly => format!("bound-only, exact value in [{}, {}]", t.lower_bound, t.value),
    };
    println!("{} n={}: {} ({status})", query.kind, t.target, t.value);
    match &t.lower {
        Some(c) => {
            let witness = c
                .witness_graph6
                .as_deref()
                .or(c.witness_coloring.as_deref())
                .unwrap_or("?");
            println!(
                "  lower: witness at size {}: {witness} has value {} ({} fails)",
                c.parameters.size, c.value, c.predicate
            );
        }
        None => println!("  lower: none needed (threshold is 1)"),
    }
    if let Some(c) = &t.upper {
        println!(
            "  upper: exhaustive at size {}: {} instances, minimum value {} ({})",
            c.parameters.size,
            c.scanned_count.unwrap_or(0),
            c.value,
            c.predicate
        );
    }
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    let query = search_query(&args);
    if args.resume {
        match record::lookup(&args.cache, &query) {
            Ok(Some(rec)) => {
                let cached: Result<Threshold, _> = serde_json::from_value(rec.certificate.clone());
                match cached {
                    Ok(t) if t.validate().is_ok() => {
                        if args.json {
                            println!("{}", rec.to_json_line());
                        } else {
                            println!("(cached)");
                            print_threshold(&query, &t);
                        }
                        return ExitCode::SUCCESS;
                    }
                    _ => eprintln!("warning: cached record failed validation; recomputing"),
                }
            }
            Ok(None) => {}
            Err(e) => eprintln!("warning: cannot read cache {}: {e}", args.cache.display()),
        }
    }

    let opts = SearchOptions {
        budget: args.budget,
        exec: exec_for(args.threads),
    };
    let start = Instant::now();
    let t = match run_search(&args, &opts) {
        Ok(t) => t,
        Err(Error::Undecided { lower, upper }) => {
            let upper = upper.map_or("unknown".to_string(), |u| u.to_string());
            eprintln!("budget exceeded: threshold lies in [{lower}, {upper}]");
            if args.json {
                println!(
                    "{}",
                    json!({ "schema": SCHEMA, "query": query, "undecided": { "lower": lower, "upper": upper } })
                );
            }
            return ExitCode::from(EXIT_BUDGET);
        }
        Err(e) => return input_error(e),
    };
    let record = ResultRecord {
        schema: SCHEMA,
        query: query.clone(),
        value: t.value,
        exhaustive: t.is_exact(),
        certificate: serde_json::to_value(&t).expect("threshold serializes"),
        engine_version: rprime_core::ENGINE_VERSION.into(),
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    if !args.no_cache {
        if let Err(e) = record::append(&args.cache, &record) {
            eprintln!("warning: cannot write cache {}: {e}", args.cache.display());
        }
    }
    if args.json {
        println!("{}", record.to_json_line());
    } else {
        print_threshold(&query, &t);
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if let Some(id) = &args.only {
        if !claim_ids().contains(&id.as_str()) {
            return input_error(format!("unknown check {id:?}; known: {}", claim_ids().join(", ")));
        }
    }
    let results = run_claims(args.only.as_deref(), exec_for(args.threads));
    let all_passed = results.iter().all(|r| r.passed);
    if args.json {
        println!(
            "{}",
            json!({ "schema": SCHEMA, "passed": all_passed, "checks": results })
        );
    } else {
        println!(
            "{:<14} {:<6} {:>10}  claim / expected / computed",
            "check", "status", "time"
        );
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("{:<14} {status:<6} {:>8.1}ms  {}", r.id, r.elapsed_ms, r.claim);
            println!("{:<33}expected: {}", "", r.expected);
            println!("{:<33}computed: {}", "", r.computed);
            if !r.within_limit {
                println!("{:<33}over the {} ms limit", "", r.limit_ms);
            }
        }
        let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
        if failed.is_empty() {
            println!("all {} checks passed", results.len());
        } else {
            println!("mismatches: {}", failed.join(", "));
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}
