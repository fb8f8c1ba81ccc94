//! Command-line front end. Every command prints one JSON document (or the
//! artifact's native text with `--format text`) and exits 0 on success,
//! 2 on a negative answer and 1 on errors.

use std::io::Read as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coloring::{pcentered_from_layout, verify_pcentered_with_budget, Colouring};
use crate::decomp::{
    enforce_wellformed, exact_tree_decomposition, fold_dipole, fold_fan, measure_dipole_parameters,
    measure_fan_parameters, min_fill_decomposition, validate_decomposition, TreeDecomposition,
    DEFAULT_EXACT_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph};
use crate::layout::{bandwidth_of_layout, validate_layout, TreeLayout};
use crate::obstructions::{
    dipole_witness, exact_parameter, fan_number, fan_witness, Certificate, Parameter,
};
use crate::searchgame::{layout_from_strategy, strategy_from_layout, Event, SearchTrace};
use crate::solver::{
    approximate_treebandwidth, decide_treebandwidth_with_budget, exact_treebandwidth_with_budget,
    overlap_treewidth_pipeline, verify_reject, Approximation, Decision, OverlapOutcome, Reject,
};
use crate::spqr::{build_spqr, gem_free_check, planar_fan_conditions, planar_layout_construct};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "treeband", version, about = "Tree-layouts and treebandwidth")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Search budget for the exact solvers and exhaustive checks.
    #[arg(long, global = true, default_value_t = crate::solver::DEFAULT_MAX_STATES)]
    pub max_states: u64,
    /// Refuse graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = 256)]
    pub max_n: usize,
    /// Worker threads; the current algorithms run on one.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, or `-` for standard input.
    pub graph: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Treebandwidth: exact value, decision, or approximation.
    #[command(subcommand)]
    Tbw(TbwCmd),
    /// Fan and dipole numbers with witnesses.
    #[command(subcommand)]
    Obstruct(ObstructCmd),
    /// Tree decomposition validation, folding and the overlap pipeline.
    #[command(subcommand)]
    Decomp(DecompCmd),
    /// SPQR trees and the planar construction.
    #[command(subcommand)]
    Spqr(SpqrCmd),
    /// p-centered colourings.
    #[command(subcommand)]
    Color(ColorCmd),
    /// The occupation-time searching game.
    #[command(subcommand)]
    Game(GameCmd),
    /// Exact small-graph parameters.
    #[command(subcommand)]
    Params(ParamsCmd),
    /// Re-check an emitted artifact against a graph.
    Verify {
        #[arg(long, value_enum)]
        kind: ArtifactKind,
        /// Artifact file.
        #[arg(long)]
        artifact: String,
        /// Bandwidth, width or rejection bound to check against.
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        p: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Generate a graph; `random` draws from TREEBAND_SEED.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        #[arg(short)]
        n: usize,
        /// Second size parameter (grid columns, bipartite side).
        #[arg(short)]
        m: Option<usize>,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TbwCmd {
    Exact(Input),
    Decide {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    Approx {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum ObstructCmd {
    Fan(Input),
    Dipole(Input),
}

#[derive(Debug, Args)]
pub struct FoldArgs {
    /// Input decomposition; defaults to a well-formed minimum-width one
    /// (min-fill above the exact solver's size limit).
    #[arg(long)]
    pub decomp: Option<String>,
    /// Condition parameters; measured from the decomposition when omitted.
    #[arg(short, requires_all = ["b", "c"])]
    pub a: Option<usize>,
    #[arg(short)]
    pub b: Option<usize>,
    #[arg(short)]
    pub c: Option<usize>,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Subcommand)]
pub enum DecompCmd {
    Validate {
        #[arg(long)]
        decomp: String,
        /// Adhesion bound for the leanness checks.
        #[arg(short)]
        k: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    FoldFan(FoldArgs),
    FoldDipole(FoldArgs),
    Overlap {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum SpqrCmd {
    Build(Input),
    Gem(Input),
    PlanarCheck {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    PlanarLayout {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum ColorCmd {
    Pcentered {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        layout: String,
        #[command(flatten)]
        input: Input,
    },
    Verify {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        colouring: String,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum GameCmd {
    Simulate {
        #[arg(long)]
        layout: String,
        #[command(flatten)]
        input: Input,
    },
    Rebuild {
        #[arg(long)]
        trace: String,
        /// Target bandwidth; the occupation bound is `k + 1`.
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum ParamsCmd {
    Exact {
        #[arg(long)]
        param: Parameter,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArtifactKind {
    Layout,
    Decomp,
    Colouring,
    Trace,
    Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Path,
    Cycle,
    Complete,
    Star,
    Bipartite,
    Grid,
    Wall,
    Fan,
    Dipole,
    Random,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub code: i32,
    pub json: Value,
    /// Native text form of the main artifact, if there is one.
    pub text: Option<String>,
}

impl Output {
    fn ok(json: Value) -> Output {
        Output {
            code: 0,
            json,
            text: None,
        }
    }

    fn no(json: Value) -> Output {
        Output {
            code: 2,
            json,
            text: None,
        }
    }

    fn with_text(mut self, text: String) -> Output {
        self.text = Some(text);
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut doc = self.json.clone();
        if let Value::Object(map) = &mut doc {
            map.insert("schema".into(), json!(SCHEMA_VERSION));
        }
        match (format, &self.text) {
            (Format::Text, Some(t)) => t.clone(),
            _ => format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")),
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::VertexOutOfRange(_) | Error::Loop(_) | Error::DuplicateEdge(..) => "graph",
        Error::InvalidParameter(_) => "parameter",
        Error::Structure(_) => "structure",
        Error::SizeLimit { .. } => "size-limit",
        Error::Budget(_) => "budget",
        Error::Precondition(_) => "precondition",
        Error::MissingEdge(..) => "missing-edge",
    }
}

pub fn error_output(kind: &str, message: &str) -> Output {
    Output {
        code: 1,
        json: json!({ "error": { "kind": kind, "message": message } }),
        text: None,
    }
}

fn read_source(path: &str) -> Result<String> {
    let io = |e: std::io::Error| Error::InvalidParameter(format!("cannot read {path}: {e}"));
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn layout_json(g: &Graph, t: &TreeLayout) -> Value {
    json!({
        "root": t.root(),
        "parent": t.parents(),
        "bandwidth": bandwidth_of_layout(g, t).ok(),
    })
}

fn decomposition_json(d: &TreeDecomposition) -> Value {
    json!({
        "bags": d.bags(),
        "edges": d.edges(),
        "root": d.root(),
        "width": d.width(),
    })
}

fn trace_json(tr: &SearchTrace) -> Value {
    let events: Vec<Value> = tr
        .events()
        .into_iter()
        .map(|(step, e)| match e {
            Event::Place(v) => json!({ "step": step, "place": v }),
            Event::Remove(v) => json!({ "step": step, "remove": v }),
            Event::Capture => json!({ "step": step, "capture": true }),
        })
        .collect();
    let nodes: Vec<Value> = tr
        .nodes
        .iter()
        .map(|n| {
            json!({
                "territory": n.territory,
                "removed": n.removed,
                "place": n.place,
                "step": n.step,
                "parent": n.parent,
                "children": n.children,
            })
        })
        .collect();
    json!({
        "events": events,
        "branches": nodes,
        "occupation": tr.occupation,
        "max_occupation": tr.max_occupation(),
    })
}

struct Ctx {
    max_states: u64,
    max_n: usize,
}

impl Ctx {
    fn graph(&self, input: &Input) -> Result<Graph> {
        let g = Graph::parse(&read_source(&input.graph)?)?;
        if g.n() > self.max_n {
            return Err(Error::SizeLimit {
                what: "graph",
                size: g.n(),
                limit: self.max_n,
            });
        }
        Ok(g)
    }
}

fn load_layout(path: &str) -> Result<TreeLayout> {
    TreeLayout::parse(&read_source(path)?)
}

fn load_decomposition(path: &str, g: &Graph) -> Result<TreeDecomposition> {
    let (d, n) = TreeDecomposition::parse(&read_source(path)?)?;
    if n != g.n() {
        return Err(Error::Structure(format!("decomposition declares {n} vertices, graph has {}", g.n())));
    }
    Ok(d)
}

fn reject_json(k: usize, r: &Reject) -> Value {
    json!({ "answer": "reject", "k": k, "witness": r })
}

fn fold(g: &Graph, args: &FoldArgs, dipole: bool) -> Result<Output> {
    let d = match &args.decomp {
        Some(path) => load_decomposition(path, g)?,
        None if g.n() <= DEFAULT_EXACT_LIMIT => enforce_wellformed(g, &exact_tree_decomposition(g)?),
        None => enforce_wellformed(g, &min_fill_decomposition(g)),
    };
    let (a, b, c) = match (args.a, args.b, args.c) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ if dipole => measure_dipole_parameters(g, &d)?,
        _ => measure_fan_parameters(g, &d)?,
    };
    let report = if dipole {
        fold_dipole(g, &d, a, b, c)?
    } else {
        fold_fan(g, &d, a, b, c)?
    };
    let text = report.decomposition.to_text(g.n());
    Ok(Output::ok(json!({
        "params": [a, b, c],
        "decomposition": decomposition_json(&report.decomposition),
        "width": report.width,
        "max_adhesion": report.max_adhesion,
        "max_span_diameter": report.max_span_diameter,
        "diameter_bound": report.diameter_bound,
        "overlap": report.overlap,
        "overlap_bound": report.overlap_bound,
    }))
    .with_text(text))
}

fn random_graph(n: usize, density: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter("density must lie in [0, 1]".into()));
    }
    let seed = match std::env::var("TREEBAND_SEED") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidParameter("TREEBAND_SEED must be an unsigned integer".into()))?,
        Err(_) => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn verify_artifact(
    ctx: &Ctx,
    kind: ArtifactKind,
    artifact: &str,
    k: Option<usize>,
    p: Option<usize>,
    g: &Graph,
) -> Result<Output> {
    let need = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| Error::InvalidParameter(format!("-{flag} is required for this artifact")))
    };
    let verdict = |valid: bool, detail: Value| {
        let doc = json!({ "kind": format!("{kind:?}").to_lowercase(), "valid": valid, "detail": detail });
        if valid {
            Output::ok(doc)
        } else {
            Output::no(doc)
        }
    };
    Ok(match kind {
        ArtifactKind::Layout => {
            let t = load_layout(artifact)?;
            match validate_layout(g, &t) {
                Ok(_) => {
                    let bw = bandwidth_of_layout(g, &t)?;
                    verdict(k.is_none_or(|k| bw <= k), json!({ "bandwidth": bw }))
                }
                Err(e) => verdict(false, json!({ "reason": e.to_string() })),
            }
        }
        ArtifactKind::Decomp => {
            let d = load_decomposition(artifact, g)?;
            let report = validate_decomposition(g, &d, k)?;
            let ok = report.is_decomposition();
            verdict(ok, serde_json::to_value(&report).expect("serializable"))
        }
        ArtifactKind::Colouring => {
            let p = need(p, "p")?;
            let c = Colouring::parse(&read_source(artifact)?)?;
            let bad = verify_pcentered_with_budget(g, &c, p, ctx.max_states)?;
            verdict(bad.is_none(), json!({ "counterexample": bad, "palette_size": c.palette_size }))
        }
        ArtifactKind::Trace => {
            let tr = SearchTrace::parse(&read_source(artifact)?)?;
            match tr.check(g) {
                Ok(()) => {
                    let occ = tr.max_occupation();
                    verdict(k.is_none_or(|k| occ <= k + 1), json!({ "max_occupation": occ }))
                }
                Err(e) => verdict(false, json!({ "reason": e.to_string() })),
            }
        }
        ArtifactKind::Witness => {
            let doc: Value = serde_json::from_str(&read_source(artifact)?)
                .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
            let k = match k {
                Some(k) => k,
                None => doc
                    .get("k")
                    .and_then(Value::as_u64)
                    .map(|k| k as usize)
                    .ok_or_else(|| Error::InvalidParameter("-k is required for this witness".into()))?,
            };
            let w = doc.get("witness").cloned().unwrap_or(doc);
            let r: Reject = serde_json::from_value(w)
                .map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
            verdict(verify_reject(g, k, &r)?, json!({ "k": k }))
        }
    })
}

fn execute(cli: &Cli) -> Result<Output> {
    let ctx = Ctx {
        max_states: cli.max_states,
        max_n: cli.max_n,
    };
    if cli.threads == 0 {
        return Err(Error::InvalidParameter("--threads must be at least 1".into()));
    }
    Ok(match &cli.command {
        Command::Tbw(TbwCmd::Exact(input)) => {
            let g = ctx.graph(input)?;
            let (k, t) = exact_treebandwidth_with_budget(&g, ctx.max_states)?;
            Output::ok(json!({ "treebandwidth": k, "layout": layout_json(&g, &t) })).with_text(t.to_text())
        }
        Command::Tbw(TbwCmd::Decide { k, input }) => {
            let g = ctx.graph(input)?;
            match decide_treebandwidth_with_budget(&g, *k, ctx.max_states)? {
                Decision::Yes(t) => Output::ok(json!({ "answer": "yes", "k": k, "layout": layout_json(&g, &t) }))
                    .with_text(t.to_text()),
                Decision::No => Output::no(json!({ "answer": "no", "k": k, "witness": { "kind": "exhaustive-search" } })),
            }
        }
        Command::Tbw(TbwCmd::Approx { k, input }) => {
            let g = ctx.graph(input)?;
            match approximate_treebandwidth(&g, *k)? {
                Approximation::Layout(l) => Output::ok(json!({
                    "answer": "layout",
                    "k": k,
                    "layout": layout_json(&g, &l.layout),
                    "bandwidth": l.bandwidth,
                    "provider_width": l.provider_width,
                    "fold_params": l.fold.params,
                    "max_span_diameter": l.fold.max_span_diameter,
                }))
                .with_text(l.layout.to_text()),
                Approximation::Reject(r) => Output::no(reject_json(*k, &r)),
            }
        }
        Command::Obstruct(ObstructCmd::Fan(input)) => {
            let g = ctx.graph(input)?;
            let f = fan_number(&g)?;
            let w = fan_witness(&g)?.map(|(v, m)| json!({ "vertex": v, "model": m }));
            Output::ok(json!({ "fan_number": f, "witness": w }))
        }
        Command::Obstruct(ObstructCmd::Dipole(input)) => {
            let g = ctx.graph(input)?;
            let (u, v, paths) = dipole_witness(&g)?;
            Output::ok(json!({ "dipole_number": paths, "poles": [u, v] }))
        }
        Command::Decomp(DecompCmd::Validate { decomp, k, input }) => {
            let g = ctx.graph(input)?;
            let d = load_decomposition(decomp, &g)?;
            let report = validate_decomposition(&g, &d, *k)?;
            let doc = json!({
                "decomposition": report.is_decomposition(),
                "wellformed": report.is_wellformed(),
                "report": report,
            });
            if report.is_decomposition() {
                Output::ok(doc)
            } else {
                Output::no(doc)
            }
        }
        Command::Decomp(DecompCmd::FoldFan(args)) => fold(&ctx.graph(&args.input)?, args, false)?,
        Command::Decomp(DecompCmd::FoldDipole(args)) => fold(&ctx.graph(&args.input)?, args, true)?,
        Command::Decomp(DecompCmd::Overlap { k, input }) => {
            let g = ctx.graph(input)?;
            match overlap_treewidth_pipeline(&g, *k)? {
                OverlapOutcome::Decomposition(d) => Output::ok(json!({
                    "answer": "decomposition",
                    "k": k,
                    "decomposition": decomposition_json(&d.fold.decomposition),
                    "provider_width": d.provider_width,
                    "width": d.width,
                    "overlap": d.overlap,
                    "fold_params": d.fold.params,
                }))
                .with_text(d.fold.decomposition.to_text(g.n())),
                OverlapOutcome::Reject(r) => Output::no(reject_json(*k, &r)),
            }
        }
        Command::Spqr(SpqrCmd::Build(input)) => {
            let g = ctx.graph(input)?;
            let t = build_spqr(&g)?;
            Output::ok(json!({ "spqr": t }))
        }
        Command::Spqr(SpqrCmd::Gem(input)) => {
            let g = ctx.graph(input)?;
            let r = gem_free_check(&g)?;
            let doc = json!({ "gem_free": r.gem_free, "violation": r.violation });
            if r.gem_free {
                Output::ok(doc)
            } else {
                Output::no(doc)
            }
        }
        Command::Spqr(SpqrCmd::PlanarCheck { k, input }) => {
            let g = ctx.graph(input)?;
            let r = planar_fan_conditions(&g, *k)?;
            let doc = json!({ "passed": r.passed, "violations": r.violations, "k": k });
            if r.passed {
                Output::ok(doc)
            } else {
                Output::no(doc)
            }
        }
        Command::Spqr(SpqrCmd::PlanarLayout { k, input }) => {
            let g = ctx.graph(input)?;
            let r = planar_fan_conditions(&g, *k)?;
            if !r.passed {
                Output::no(json!({ "answer": "reject", "k": k, "violations": r.violations }))
            } else {
                let l = planar_layout_construct(&g, *k)?;
                Output::ok(json!({ "layout": layout_json(&g, &l.layout), "bandwidth": l.bandwidth, "k": k }))
                    .with_text(l.layout.to_text())
            }
        }
        Command::Color(ColorCmd::Pcentered { p, layout, input }) => {
            let g = ctx.graph(input)?;
            let t = load_layout(layout)?;
            let c = pcentered_from_layout(&g, &t, *p)?;
            Output::ok(json!({ "p": p, "palette_size": c.palette_size, "colour": c.colour })).with_text(c.to_text())
        }
        Command::Color(ColorCmd::Verify { p, colouring, input }) => {
            let g = ctx.graph(input)?;
            let c = Colouring::parse(&read_source(colouring)?)?;
            let bad = verify_pcentered_with_budget(&g, &c, *p, ctx.max_states)?;
            let doc = json!({ "p": p, "p_centered": bad.is_none(), "counterexample": bad });
            if bad.is_none() {
                Output::ok(doc)
            } else {
                Output::no(doc)
            }
        }
        Command::Game(GameCmd::Simulate { layout, input }) => {
            let g = ctx.graph(input)?;
            let t = load_layout(layout)?;
            let tr = strategy_from_layout(&g, &t)?;
            let mut doc = trace_json(&tr);
            doc["bandwidth"] = json!(bandwidth_of_layout(&g, &t)?);
            Output::ok(doc).with_text(tr.to_text())
        }
        Command::Game(GameCmd::Rebuild { trace, k, input }) => {
            let g = ctx.graph(input)?;
            let tr = SearchTrace::parse(&read_source(trace)?)?;
            let t = layout_from_strategy(&g, &tr, k + 1)?;
            Output::ok(json!({ "layout": layout_json(&g, &t) })).with_text(t.to_text())
        }
        Command::Params(ParamsCmd::Exact { param, input }) => {
            let g = ctx.graph(input)?;
            let (value, cert) = exact_parameter(&g, *param)?;
            let cert = match &cert {
                Certificate::Decomposition(d) => json!({ "decomposition": decomposition_json(d) }),
                Certificate::Forest(f) => json!({ "forest": f }),
                Certificate::Linear(l) => json!({ "order": l.order() }),
                Certificate::Layout(t) => json!({ "layout": layout_json(&g, t) }),
            };
            Output::ok(json!({ "parameter": param.to_string(), "value": value, "certificate": cert }))
        }
        Command::Verify {
            kind,
            artifact,
            k,
            p,
            input,
        } => {
            let g = ctx.graph(input)?;
            verify_artifact(&ctx, *kind, artifact, *k, *p, &g)?
        }
        Command::Gen { family, n, m, density } => {
            let n = *n;
            let m2 = m.unwrap_or(n);
            let g = match family {
                GenFamily::Path => generate(&Family::Path(n))?,
                GenFamily::Cycle => generate(&Family::Cycle(n))?,
                GenFamily::Complete => generate(&Family::Complete(n))?,
                GenFamily::Star => generate(&Family::Star(n))?,
                GenFamily::Bipartite => generate(&Family::CompleteBipartite(n, m2))?,
                GenFamily::Grid => generate(&Family::Grid(n, m2))?,
                GenFamily::Wall => generate(&Family::Wall(n))?,
                GenFamily::Fan => generate(&Family::Fan(n))?,
                GenFamily::Dipole => generate(&Family::DipoleSubdivided(n))?,
                GenFamily::Random => random_graph(n, *density)?,
            };
            Output::ok(json!({ "n": g.n(), "edges": g.edges() })).with_text(g.to_text())
        }
    })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> (Output, Format)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let out = Output {
                code: if shown { 0 } else { 1 },
                json: json!({ "error": { "kind": "usage", "message": e.to_string() } }),
                text: Some(e.to_string()),
            };
            return (out, if shown { Format::Text } else { Format::Json });
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => error_output(error_kind(&e), &e.to_string()),
    };
    (out, cli.format)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str, body: &str) -> String {
        let dir = std::env::temp_dir().join(format!("treeband-cli-unit-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn exact_on_path() {
        let g = tmp("p6.txt", &generate(&Family::Path(6)).unwrap().to_text());
        let (out, _) = run(["treeband", "tbw", "exact", &g]);
        assert_eq!(out.code, 0);
        assert_eq!(out.json["treebandwidth"], 1);
    }

    #[test]
    fn decide_no_exits_two() {
        let g = tmp("k4.txt", &generate(&Family::Complete(4)).unwrap().to_text());
        let (out, _) = run(["treeband", "tbw", "decide", "-k", "2", &g]);
        assert_eq!(out.code, 2);
        assert_eq!(out.json["answer"], "no");
    }

    #[test]
    fn errors_exit_one() {
        let (out, _) = run(["treeband", "tbw", "exact", "/nonexistent/graph.txt"]);
        assert_eq!(out.code, 1);
        let (out, _) = run(["treeband", "tbw", "frobnicate"]);
        assert_eq!(out.code, 1);
        assert_eq!(out.json["error"]["kind"], "usage");
    }

    #[test]
    fn schema_is_stamped() {
        let out = Output::ok(json!({ "a": 1 }));
        assert!(out.render(Format::Json).contains("\"schema\": 1"));
    }
}
