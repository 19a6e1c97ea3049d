//! Command-line front end. Exit codes: 0 success, 2 unreadable or
//! malformed input, 3 rejected by a library contract, 4 a guaranteed bound
//! was violated.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::gen::{self, Family};
use crate::graph::Graph;
use crate::hierarchy::build_hierarchy_capped;
use crate::io::{self, GraphFormat};
use crate::separators::{best_k_disk_separator_capped, DEFAULT_K_CAP};
use crate::spanners::{self, SystemMode};
use crate::treedec::{self, TreeDecomposition};
use crate::verify::{self, DEFAULT_APSP_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "spannerweave", version, about = "Additive spanners and collective tree spanners from balanced disk-separator hierarchies")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "SPANNERWEAVE_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a seeded instance (edge list on stdout).
    Gen(GenArgs),
    /// Minimum-radius balanced separator made of k disks.
    Separator(SeparatorArgs),
    /// Recursive separator hierarchy.
    Decompose(DecomposeArgs),
    /// Sparse additive spanner or collective tree spanners.
    Spanner(SpannerArgs),
    /// Measure the surplus of a spanner or a tree collection.
    Verify(VerifyArgs),
    /// Check a PACE tree decomposition.
    TdValidate(TdPair),
    /// Width, length, breadth and k-breadth of a decomposition.
    TdMetrics(TdMetricsArgs),
    /// Replace every bag by its r-neighborhood.
    TdExpand(TdExpandArgs),
    /// Turn a decomposition of a t-spanner into one of the host graph.
    TdLift(TdLiftArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Edgelist)]
    pub format: OutFormat,
    /// Write the certificate JSON here.
    #[arg(long, global = true)]
    pub certificate: Option<PathBuf>,
    /// Write the planted spanner (edge list) here.
    #[arg(long, global = true)]
    pub planted_spanner: Option<PathBuf>,
    /// Write the planted decomposition (PACE) here.
    #[arg(long, global = true)]
    pub planted_td: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum GenKind {
    Cycle { len: usize },
    Chordal { n: usize },
    Grid { rows: usize, cols: usize },
    /// Random tree plus `extra` random edges.
    Connected { n: usize, extra: usize },
    /// Random tree plus `extra` edges spanning at most `t` tree hops.
    TreeSpanner { n: usize, t: u32, extra: usize },
    /// Random partial k-tree plus `extra` edges spanning at most `t` hops.
    TwSpanner { n: usize, k: usize, t: u32, extra: usize },
}

impl From<GenKind> for Family {
    fn from(kind: GenKind) -> Self {
        match kind {
            GenKind::Cycle { len } => Family::Cycle { len },
            GenKind::Chordal { n } => Family::Chordal { n },
            GenKind::Grid { rows, cols } => Family::Grid { rows, cols },
            GenKind::Connected { n, extra } => Family::Connected { n, extra },
            GenKind::TreeSpanner { n, t, extra } => Family::PlantedTreeSpanner { n, t, extra },
            GenKind::TwSpanner { n, k, t, extra } => Family::PlantedTwSpanner { n, k, t, extra },
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Edgelist,
    Dimacs,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sparse,
    Collective,
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph file (edge list or DIMACS); stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KArgs {
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Refuse k above this value.
    #[arg(long, default_value_t = DEFAULT_K_CAP)]
    pub k_cap: usize,
}

#[derive(Args, Debug)]
pub struct SeparatorArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub k: KArgs,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub k: KArgs,
    /// Emit Graphviz instead of JSON.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Args, Debug)]
pub struct SpannerArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[command(flatten)]
    pub k: KArgs,
    #[arg(long, value_enum, default_value_t = Mode::Collective)]
    pub mode: Mode,
    /// Measure the surplus exactly and enforce the guaranteed bounds.
    #[arg(long)]
    pub verify: bool,
    /// Largest graph for which --verify runs all-pairs distances.
    #[arg(long, default_value_t = DEFAULT_APSP_LIMIT)]
    pub apsp_limit: usize,
    /// `json` (default) or `edgelist` (sparse mode only).
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub format: OutFormat,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Spanning subgraph to measure.
    #[arg(long, conflicts_with = "trees")]
    pub spanner: Option<PathBuf>,
    /// Spanning trees measured collectively.
    #[arg(long, num_args = 1..)]
    pub trees: Vec<PathBuf>,
    /// Exit with status 4 if the surplus exceeds this.
    #[arg(long)]
    pub max_surplus: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_APSP_LIMIT)]
    pub apsp_limit: usize,
}

#[derive(Args, Debug)]
pub struct TdPair {
    pub graph: PathBuf,
    /// PACE `.td` file.
    pub td: PathBuf,
}

#[derive(Args, Debug)]
pub struct TdMetricsArgs {
    #[command(flatten)]
    pub files: TdPair,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Report a greedy upper bound when exact k-breadth is out of reach.
    #[arg(long)]
    pub greedy: bool,
}

#[derive(Args, Debug)]
pub struct TdExpandArgs {
    #[command(flatten)]
    pub files: TdPair,
    #[arg(long)]
    pub radius: u32,
}

#[derive(Args, Debug)]
pub struct TdLiftArgs {
    /// Host graph.
    pub graph: PathBuf,
    /// Spanner of the host graph.
    pub spanner: PathBuf,
    /// Decomposition of the spanner (PACE).
    pub td: PathBuf,
    #[arg(long)]
    pub stretch: u32,
}

/// Outcome of a subcommand that did not crash.
enum Failure {
    Input(String),
    Contract(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Input(e.to_string()),
            other => Failure::Contract(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read(&mut self, path: Option<&Path>) -> std::result::Result<String, Failure> {
        let mut text = String::new();
        match path {
            None => self.stdin.read_to_string(&mut text).map(|_| ()),
            Some(p) if p == Path::new("-") => self.stdin.read_to_string(&mut text).map(|_| ()),
            Some(p) => std::fs::read_to_string(p).map(|t| text = t),
        }
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.map_or("stdin".into(), |p| p.display().to_string()))))?;
        Ok(text)
    }

    fn graph(&mut self, path: Option<&Path>) -> std::result::Result<Graph, Failure> {
        let text = self.read(path)?;
        io::parse_graph(&text).map_err(|e| Failure::Input(with_file(path, e)))
    }

    fn td(&mut self, path: &Path) -> std::result::Result<TreeDecomposition, Failure> {
        let text = self.read(Some(path))?;
        treedec::parse_pace(&text).map_err(|e| Failure::Input(with_file(Some(path), e)))
    }

    fn emit(&mut self, text: &str) -> Outcome {
        self.out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("cannot write output: {e}")))
    }

    fn emit_json(&mut self, value: &serde_json::Value) -> Outcome {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        self.emit(&text)
    }
}

fn with_file(path: Option<&Path>, e: Error) -> String {
    format!("{}: {e}", path.map_or("stdin".into(), |p| p.display().to_string()))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut ctx = Ctx { stdin, out };
    if let Some(t) = cli.threads {
        // the global pool can only be set once per process; later calls keep it
        if t == 0 {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return EXIT_CONTRACT;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = dispatch(cli.command, &mut ctx);
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Contract(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CONTRACT
        }
        Err(Failure::Bound(msg)) => {
            let _ = writeln!(err, "bound violated: {msg}");
            EXIT_BOUND
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Outcome {
    match cmd {
        Command::Gen(a) => cmd_gen(a, ctx),
        Command::Separator(a) => {
            let g = ctx.graph(a.graph.input.as_deref())?;
            let sep = best_k_disk_separator_capped(&g, a.k.k, a.k.k_cap)?;
            ctx.emit_json(&serde_json::to_value(sep.summary()).unwrap())
        }
        Command::Decompose(a) => {
            let g = ctx.graph(a.graph.input.as_deref())?;
            let h = build_hierarchy_capped(&g, a.k.k, a.k.k_cap)?;
            if a.dot {
                ctx.emit(&h.to_dot())
            } else {
                ctx.emit_json(&h.to_json())
            }
        }
        Command::Spanner(a) => cmd_spanner(a, ctx),
        Command::Verify(a) => cmd_verify(a, ctx),
        Command::TdValidate(a) => {
            let g = ctx.graph(Some(&a.graph))?;
            let td = ctx.td(&a.td)?;
            let violations = treedec::validate(&g, &td);
            ctx.emit_json(&json!({ "valid": violations.is_empty(), "violations": violations }))?;
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Contract(format!("{} violation(s)", violations.len())))
            }
        }
        Command::TdMetrics(a) => {
            let g = ctx.graph(Some(&a.files.graph))?;
            let td = ctx.td(&a.files.td)?;
            let m = treedec::metrics(&g, &td, a.k, a.greedy)?;
            ctx.emit_json(&serde_json::to_value(m).unwrap())
        }
        Command::TdExpand(a) => {
            let g = ctx.graph(Some(&a.files.graph))?;
            let td = ctx.td(&a.files.td)?;
            if let Some(v) = treedec::validate(&g, &td).first() {
                return Err(Failure::Contract(format!("invalid decomposition: {v:?}")));
            }
            ctx.emit(&treedec::to_pace(&treedec::expand(&g, &td, a.radius)))
        }
        Command::TdLift(a) => {
            let g = ctx.graph(Some(&a.graph))?;
            let h = ctx.graph(Some(&a.spanner))?;
            let td = ctx.td(&a.td)?;
            let lifted = treedec::lift(&g, &h, &td, a.stretch)?;
            ctx.emit(&treedec::to_pace(&lifted))
        }
    }
}

fn cmd_gen(a: GenArgs, ctx: &mut Ctx) -> Outcome {
    let inst = gen::generate(a.kind.into(), a.seed)?;
    gen::verify_certificate(&inst.graph, &inst.certificate)?;
    if let Some(p) = &a.certificate {
        write_file(p, &(serde_json::to_string_pretty(&inst.certificate).unwrap() + "\n"))?;
    }
    if let Some(p) = &a.planted_spanner {
        let h = inst.planted_spanner().ok_or_else(|| Failure::Contract("this generator plants no spanner".into()))?;
        write_file(p, &io::write_edge_list(&h))?;
    }
    if let Some(p) = &a.planted_td {
        let td = inst.certificate.decomposition.as_ref();
        let td = td.ok_or_else(|| Failure::Contract("this generator plants no decomposition".into()))?;
        write_file(p, &treedec::to_pace(td))?;
    }
    let text = match a.format {
        OutFormat::Dimacs => io::write_graph(&inst.graph, GraphFormat::Dimacs),
        OutFormat::Edgelist => io::write_graph(&inst.graph, GraphFormat::EdgeList),
        OutFormat::Json => {
            let value = json!({ "n": inst.graph.n(), "edges": inst.graph.edges(), "certificate": inst.certificate });
            serde_json::to_string_pretty(&value).unwrap() + "\n"
        }
        OutFormat::Dot => return Err(Failure::Contract("gen does not emit dot".into())),
    };
    ctx.emit(&text)
}

fn cmd_spanner(a: SpannerArgs, ctx: &mut Ctx) -> Outcome {
    let g = ctx.graph(a.graph.input.as_deref())?;
    if a.verify && g.n() > a.apsp_limit {
        return Err(Failure::Contract(format!(
            "--verify needs all-pairs distances; {} vertices exceed the limit of {}",
            g.n(),
            a.apsp_limit
        )));
    }
    let h = build_hierarchy_capped(&g, a.k.k, a.k.k_cap)?;
    let system = match a.mode {
        Mode::Sparse => spanners::sparse_spanner(&h),
        Mode::Collective => spanners::collective_system(&h),
    };
    let n = g.n();
    let surplus_bound = spanners::surplus_bound(&h);
    let tree_bound = spanners::tree_count_bound(n, a.k.k).max(1.0);
    let edge_bound = spanners::edge_bound(n, a.k.k);
    if a.format == OutFormat::Edgelist {
        if system.mode != SystemMode::SparseUnion {
            return Err(Failure::Contract("edge list output is only available in sparse mode".into()));
        }
        ctx.emit(&io::write_edge_list(&g.edge_subgraph(&system.trees[0].edges)?))?;
    }
    let mut doc = json!({
        "mode": system.mode,
        "k": a.k.k,
        "n": n,
        "m": g.m(),
        "depth": h.depth(),
        "r_max": h.max_radius(),
        "edges": system.num_edges(),
        "bounds": { "surplus": surplus_bound, "trees": tree_bound, "edges": edge_bound },
        "trees": system.trees,
    });
    let mut violations = Vec::new();
    if a.verify {
        let graphs = system.tree_graphs(&g)?;
        let report = match system.mode {
            SystemMode::SparseUnion => verify::surplus(&g, &graphs[0])?,
            SystemMode::Collective => verify::collective_surplus(&g, &graphs)?,
        };
        if f64::from(report.max_surplus) > surplus_bound {
            violations.push(format!("surplus {} exceeds {surplus_bound:.3}", report.max_surplus));
        }
        match system.mode {
            SystemMode::Collective if system.trees.len() as f64 > tree_bound => {
                violations.push(format!("{} trees exceed {tree_bound:.3}", system.trees.len()));
            }
            SystemMode::SparseUnion if system.num_edges() as f64 > edge_bound.max(0.0) && n > 1 => {
                violations.push(format!("{} edges exceed {edge_bound:.3}", system.num_edges()));
            }
            _ => {}
        }
        doc["report"] = serde_json::to_value(&report).unwrap();
        doc["bounds_hold"] = json!(violations.is_empty());
    }
    if a.format != OutFormat::Edgelist {
        ctx.emit_json(&doc)?;
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Bound(violations.join("; ")))
    }
}

fn cmd_verify(a: VerifyArgs, ctx: &mut Ctx) -> Outcome {
    let g = ctx.graph(a.graph.input.as_deref())?;
    if g.n() > a.apsp_limit {
        return Err(Failure::Contract(format!("{} vertices exceed the all-pairs limit of {}", g.n(), a.apsp_limit)));
    }
    let report = if let Some(p) = &a.spanner {
        let h = ctx.graph(Some(p))?;
        verify::surplus(&g, &h)?
    } else if !a.trees.is_empty() {
        let trees = a.trees.iter().map(|p| ctx.graph(Some(p))).collect::<std::result::Result<Vec<_>, _>>()?;
        verify::collective_surplus(&g, &trees)?
    } else {
        return Err(Failure::Contract("give --spanner or --trees".into()));
    };
    ctx.emit_json(&serde_json::to_value(&report).unwrap())?;
    match a.max_surplus {
        Some(b) if f64::from(report.max_surplus) > b => {
            Err(Failure::Bound(format!("surplus {} exceeds {b}", report.max_surplus)))
        }
        _ => Ok(()),
    }
}
