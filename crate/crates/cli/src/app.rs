//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use hyperconn::generators;
use hyperconn::strongcut::{kappa_s_edge_with, kappa_s_pair_with};
use hyperconn::{
    alpha, classify, components, kappa_s_with, kappa_w, kappa_w_edge, kappa_w_pair, tau, Budgets,
    Error, Graph, Hypergraph, KappaSOptions, Verdict,
};

use crate::hgr::{parse_hgr, write_hgr, ParseError};
use crate::report::{class_entries, BudgetStatus, Report, WitnessKind, SCHEMA_VERSION};
use crate::verify::{self, Deletion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hyperconn", version, about = "Weak and strong connectivity of hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Print the report as JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print the report as `key: value` lines.
    #[arg(long, global = true)]
    pub text: bool,
    /// Candidate subsets tested by exhaustive searches.
    #[arg(long, global = true, env = "HYPERCONN_BUDGET_SUBSETS", default_value_t = 20_000_000)]
    pub budget_subsets: u64,
    /// Paths enumerated when building path-support hypergraphs.
    #[arg(long, global = true, env = "HYPERCONN_BUDGET_PATHS", default_value_t = 10_000)]
    pub budget_paths: u64,
    /// Spanning trees tried when looking for a representative tree.
    #[arg(long, global = true, env = "HYPERCONN_BUDGET_TREES", default_value_t = 100_000)]
    pub budget_trees: u64,
}

#[derive(Debug, Args)]
pub struct Input {
    /// HGR file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairInput {
    /// First vertex (1-based).
    #[arg(long)]
    pub u: usize,
    /// Second vertex (1-based).
    #[arg(long)]
    pub v: usize,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Fig1,
    Fig2,
    Fig3,
    TwoBooks,
    FanoDoubled,
    Random,
    RandomInterval,
    /// Adds two vertices and two edges to the input hypergraph.
    Umlaut,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub family: Family,
    /// Size parameter (fig2, random, random-interval).
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge count (random, random-interval); defaults to n.
    #[arg(long)]
    pub m: Option<usize>,
    /// Largest edge cardinality (random).
    #[arg(long, default_value_t = 3)]
    pub max_edge_size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connected components.
    Components(Input),
    /// Weak vertex connectivity.
    KappaW(Input),
    /// Weak vertex connectivity between two vertices.
    KappaWPair(PairInput),
    /// Weak edge connectivity.
    KappaWe(Input),
    /// Strong vertex connectivity.
    KappaS(Input),
    /// Strong vertex connectivity between two vertices.
    KappaSPair(PairInput),
    /// Strong edge connectivity.
    KappaSe(Input),
    /// Minimum transversal.
    Tau(Input),
    /// Maximum matching.
    Alpha(Input),
    /// Class recognition.
    Classify(Input),
    /// Writes a generated hypergraph in HGR format.
    Generate(GenerateArgs),
    /// Turns a graph (HGR with 2-vertex edges) into the vertex-cover reduction instance.
    ReduceVc(Input),
    /// Drops edges with fewer than two vertices and repeated vertices.
    Normalize(Input),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Components(_) => "components",
            Command::KappaW(_) => "kappa-w",
            Command::KappaWPair(_) => "kappa-w-pair",
            Command::KappaWe(_) => "kappa-we",
            Command::KappaS(_) => "kappa-s",
            Command::KappaSPair(_) => "kappa-s-pair",
            Command::KappaSe(_) => "kappa-se",
            Command::Tau(_) => "tau",
            Command::Alpha(_) => "alpha",
            Command::Classify(_) => "classify",
            Command::Generate(_) => "generate",
            Command::ReduceVc(_) => "reduce-vc",
            Command::Normalize(_) => "normalize",
        }
    }
}

/// What a successful command prints.
#[derive(Debug)]
pub enum Output {
    Report(Report),
    Hgr(String),
}

/// A failed command: exit code, message, and the partial report if any.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    pub report: Option<Report>,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            report: None,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

fn core_failure(e: Error) -> Failure {
    let code = match e {
        Error::BudgetExceeded { .. } | Error::TooLarge { .. } => EXIT_BUDGET,
        Error::VertexOutOfRange { .. } | Error::SameEndpoints(_) | Error::InvalidParameter(_) => {
            EXIT_USAGE
        }
        _ => EXIT_INTERNAL,
    };
    Failure::new(code, e.to_string())
}

struct Loaded {
    h: Hypergraph,
    digest: String,
}

fn load(input: &Input, stdin: &mut dyn Read) -> Result<Loaded, Failure> {
    let mut bytes = Vec::new();
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            bytes = std::fs::read(p)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_end(&mut bytes)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read standard input: {e}")))?;
        }
    }
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::new(EXIT_PARSE, "input is not UTF-8"))?;
    let h = parse_hgr(&text)?;
    Ok(Loaded {
        h,
        digest: hex::encode(Sha256::digest(&bytes)),
    })
}

fn zero_based(h: &Hypergraph, id: usize, flag: &str) -> Result<usize, Failure> {
    if id == 0 || id > h.vertex_count() {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("--{flag} {id} is not a vertex of a hypergraph on {} vertices", h.vertex_count()),
        ));
    }
    Ok(id - 1)
}

struct Run<'a> {
    command: &'static str,
    budgets: Budgets,
    digest: &'a str,
    started: Instant,
}

impl Run<'_> {
    fn budget(&self, exhausted: Option<String>) -> BudgetStatus {
        BudgetStatus {
            subsets: self.budgets.subsets,
            paths: self.budgets.paths,
            trees: self.budgets.trees,
            status: if exhausted.is_some() { "exhausted" } else { "ok" },
            exhausted,
        }
    }

    fn report(&self, value: Option<usize>, witness: &[usize], kind: WitnessKind) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            command: self.command.to_string(),
            input_digest: self.digest.to_string(),
            value,
            witness: witness.iter().map(|i| i + 1).collect(),
            witness_kind: kind,
            attained: true,
            method: None,
            pair: None,
            components: None,
            classes: None,
            verified: true,
            elapsed_ms: 0.0,
            budget: self.budget(None),
        }
    }

    /// Converts a core error, attaching a report when a budget ran out.
    fn fail(&self, e: Error) -> Failure {
        let mut f = core_failure(e);
        if f.code == EXIT_BUDGET {
            let mut r = self.report(None, &[], WitnessKind::None);
            r.attained = false;
            r.verified = false;
            r.budget = self.budget(Some(f.message.clone()));
            r.elapsed_ms = self.started.elapsed().as_secs_f64() * 1000.0;
            f.report = Some(r);
        }
        f
    }

    fn finish(&self, mut r: Report, verified: bool) -> Result<Output, Failure> {
        r.elapsed_ms = self.started.elapsed().as_secs_f64() * 1000.0;
        if !verified {
            return Err(Failure {
                code: EXIT_INTERNAL,
                message: format!("{}: witness failed verification", self.command),
                report: Some(r),
            });
        }
        Ok(Output::Report(r))
    }
}

fn generate(args: &GenerateArgs, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let need_n = || {
        args.n
            .ok_or_else(|| Failure::new(EXIT_USAGE, "this family needs --n"))
    };
    let h = match args.family {
        Family::Fig1 => generators::fig1_disjoint_cuts(),
        Family::Fig2 => generators::fig2_gap(need_n()?).map_err(core_failure)?,
        Family::Fig3 => generators::fig3_chain(),
        Family::TwoBooks => generators::two_books(),
        Family::FanoDoubled => generators::fano_doubled(),
        Family::Random => {
            let n = need_n()?;
            generators::random_hypergraph(n, args.m.unwrap_or(n), args.max_edge_size, args.seed)
                .map_err(core_failure)?
        }
        Family::RandomInterval => {
            let n = need_n()?;
            generators::random_interval_hypergraph(n, args.m.unwrap_or(n), args.seed)
                .map_err(core_failure)?
        }
        Family::Umlaut => {
            let loaded = load(&args.input, stdin)?;
            generators::umlaut(&loaded.h).map_err(core_failure)?
        }
    };
    Ok(Output::Hgr(write_hgr(&h)))
}

fn reduce_vc(h: &Hypergraph) -> Result<Output, Failure> {
    let mut pairs = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        let s = e.to_vertex_list();
        if s.len() != 2 || !e.is_set() {
            return Err(Failure::new(
                EXIT_PARSE,
                format!("edge {} is not a pair of distinct vertices", i + 1),
            ));
        }
        pairs.push((s[0], s[1]));
    }
    let g = Graph::new(h.vertex_count(), pairs).map_err(core_failure)?;
    let inst = generators::vc_reduction(&g).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let line = |name: &str, ids: &[usize]| {
        let ids: Vec<String> = ids.iter().map(|v| (v + 1).to_string()).collect();
        format!("c {name}: {}\n", ids.join(" "))
    };
    let mut out = line("A_u", &inst.a_u);
    out += &line("A_v", &inst.a_v);
    out += &line("V_G", &inst.v_g);
    out += &write_hgr(&inst.hypergraph);
    Ok(Output::Hgr(out))
}

/// Runs a parsed command line, reading input from `stdin` when no file is
/// given.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let started = Instant::now();
    let budgets = Budgets {
        subsets: cli.opts.budget_subsets,
        paths: cli.opts.budget_paths,
        trees: cli.opts.budget_trees,
        ..Budgets::default()
    };
    let input = match &cli.command {
        Command::Generate(args) => return generate(args, stdin),
        Command::Components(i)
        | Command::KappaW(i)
        | Command::KappaWe(i)
        | Command::KappaS(i)
        | Command::KappaSe(i)
        | Command::Tau(i)
        | Command::Alpha(i)
        | Command::Classify(i)
        | Command::ReduceVc(i)
        | Command::Normalize(i) => i,
        Command::KappaWPair(p) | Command::KappaSPair(p) => &p.input,
    };
    let Loaded { h, digest } = load(input, stdin)?;
    let run = Run {
        command: cli.command.name(),
        budgets,
        digest: &digest,
        started,
    };
    let h = &h;
    match &cli.command {
        Command::Generate(_) => unreachable!("handled above"),
        Command::ReduceVc(_) => reduce_vc(h),
        Command::Normalize(_) => Ok(Output::Hgr(write_hgr(&h.normalize()))),
        Command::Components(_) => {
            let groups = components(h).groups();
            let mut r = run.report(Some(groups.len()), &[], WitnessKind::None);
            r.components = Some(
                groups
                    .iter()
                    .map(|g| g.iter().map(|v| v + 1).collect())
                    .collect(),
            );
            let ok = verify::partition(h, &groups);
            run.finish(r, ok)
        }
        Command::KappaW(_) | Command::KappaWe(_) => {
            let (res, kind, deletion) = if matches!(cli.command, Command::KappaW(_)) {
                (kappa_w(h), WitnessKind::Vertices, Deletion::WeakVertices)
            } else {
                (kappa_w_edge(h), WitnessKind::Edges, Deletion::WeakEdges)
            };
            let res = res.map_err(|e| run.fail(e))?;
            let mut r = run.report(Some(res.value), &res.witness, kind);
            r.attained = res.attained;
            let ok = verify::cut(h, deletion, res.value, &res.witness, res.attained, None);
            run.finish(r, ok)
        }
        Command::KappaWPair(p) => {
            let (u, v) = (zero_based(h, p.u, "u")?, zero_based(h, p.v, "v")?);
            let res = kappa_w_pair(h, u, v).map_err(|e| run.fail(e))?;
            let mut r = run.report(Some(res.value), &res.witness, WitnessKind::Vertices);
            r.attained = res.attained;
            r.pair = Some([p.u, p.v]);
            let ok = verify::cut(h, Deletion::WeakVertices, res.value, &res.witness, res.attained, Some((u, v)));
            run.finish(r, ok)
        }
        Command::KappaS(_) | Command::KappaSe(_) | Command::KappaSPair(_) => {
            let mut pair = None;
            let (res, kind, deletion) = match &cli.command {
                Command::KappaS(_) => {
                    let opts = KappaSOptions {
                        budgets,
                        ..KappaSOptions::default()
                    };
                    (kappa_s_with(h, &opts), WitnessKind::Vertices, Deletion::StrongVertices)
                }
                Command::KappaSe(_) => {
                    (kappa_s_edge_with(h, &budgets), WitnessKind::Edges, Deletion::StrongEdges)
                }
                Command::KappaSPair(p) => {
                    let (u, v) = (zero_based(h, p.u, "u")?, zero_based(h, p.v, "v")?);
                    pair = Some((p, u, v));
                    (kappa_s_pair_with(h, u, v, &budgets), WitnessKind::Vertices, Deletion::StrongVertices)
                }
                _ => unreachable!("matched above"),
            };
            let res = res.map_err(|e| run.fail(e))?;
            let mut r = run.report(Some(res.value), &res.witness, kind);
            r.attained = res.attained;
            r.method = Some(res.method.as_str());
            r.pair = pair.map(|(p, _, _)| [p.u, p.v]);
            let ends = pair.map(|(_, u, v)| (u, v));
            let ok = verify::cut(h, deletion, res.value, &res.witness, res.attained, ends);
            run.finish(r, ok)
        }
        Command::Tau(_) => {
            let t = tau(h);
            let r = run.report(Some(t.tau), &t.witness, WitnessKind::Vertices);
            let ok = verify::transversal(h, t.tau, &t.witness);
            run.finish(r, ok)
        }
        Command::Alpha(_) => {
            let a = alpha(h);
            let r = run.report(Some(a.alpha), &a.witness, WitnessKind::Edges);
            let ok = verify::matching(h, a.alpha, &a.witness);
            run.finish(r, ok)
        }
        Command::Classify(_) => {
            let report = classify(h, &budgets);
            let mut r = run.report(None, &[], WitnessKind::None);
            r.attained = false;
            r.classes = Some(class_entries(&report));
            let exhausted: Vec<String> = report
                .entries()
                .iter()
                .filter_map(|(name, c)| match &c.verdict {
                    Verdict::Unknown(why) if *name != "normal" => Some(format!("{name}: {why}")),
                    _ => None,
                })
                .collect();
            if !exhausted.is_empty() {
                r.budget = run.budget(Some(exhausted.join("; ")));
            }
            let ok = verify::classes(h, &report) && report.hierarchy_violations().is_empty();
            run.finish(r, ok)
        }
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// code.
pub fn main_with(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let render = |r: &Report| if cli.opts.text { r.to_text() } else { r.to_json() + "\n" };
    match run(&cli, stdin) {
        Ok(Output::Report(r)) => {
            let _ = stdout.write_all(render(&r).as_bytes());
            EXIT_OK
        }
        Ok(Output::Hgr(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            if let Some(r) = &f.report {
                let _ = stdout.write_all(render(r).as_bytes());
            }
            let _ = writeln!(stderr, "hyperconn: {}", f.message);
            f.code
        }
    }
}
