//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verify check failed, 2 usage error, 3 bad
//! input (unknown preset, DSL syntax, unknown module), 4 engine error or
//! unsupported request, 5 I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tautilt::catalog::{self, Check, VerifyOptions};
use tautilt::engine::{Engine, EngineError, MutationQuiver, Pair, Summand};
use tautilt::io::{self, Format};
use tautilt::quiver::{parse_quiver, presets, DimVector, DynkinType, Quiver};

#[derive(Parser)]
#[command(name = "tautilt", version, about = "Support tau-tilting pairs of path algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Named quiver: A1..A8, D4..D6, E6..E8, K2, W4, W2m<m>.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    preset: Option<String>,
    /// Quiver DSL file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Pool depth (tau-orbit length) for representation-infinite quivers.
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value = "json")]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Restrict to tilting pairs (no support projectives, sincere).
    #[arg(long)]
    tilting_only: bool,
    #[arg(long)]
    workers: Option<usize>,
    /// Allow E7 and E8 for commands that enumerate.
    #[arg(long)]
    enable_e7e8: bool,
}

#[derive(Args, Clone)]
struct PairArgs {
    /// Module summand as a dimension vector, e.g. "1,1". Repeatable.
    #[arg(long = "module")]
    modules: Vec<String>,
    /// Vertex id of a support projective. Repeatable.
    #[arg(long = "support")]
    support: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// All support tau-tilting pairs.
    Enumerate(Common),
    /// Mutation quiver (a ball around A in bounded mode).
    Graph(Common),
    /// Mutates a pair (default A) at one summand or at all of them.
    Mutate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: PairArgs,
        /// Module summand to mutate at.
        #[arg(long, conflicts_with = "at_vertex")]
        at: Option<String>,
        /// Support projective to mutate at.
        #[arg(long)]
        at_vertex: Option<String>,
    },
    /// Bongartz completion of a tau-rigid module.
    Bongartz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Complements of an almost complete tilting module.
    Complements {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Cartan and Coxeter matrices.
    Coxeter(Common),
    /// Runs verification checks and writes a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check to run. Repeatable.
        #[arg(long = "check")]
        checks: Vec<Check>,
        /// Run every applicable check (the default).
        #[arg(long)]
        all: bool,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Engine(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Engine(_) => 4,
            Failure::Io(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Engine(m) | Failure::Io(m) => m,
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Engine(e.to_string())
    }
}

impl From<catalog::CatalogError> for Failure {
    fn from(e: catalog::CatalogError) -> Self {
        match e {
            catalog::CatalogError::Quiver(q) => Failure::Input(q.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

fn load_quiver(c: &Common) -> Result<Quiver, Failure> {
    match (&c.preset, &c.input) {
        (Some(name), None) => presets::preset(name).map_err(|e| Failure::Input(e.to_string())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            parse_quiver(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        _ => Err(Failure::Usage("give exactly one of --preset and --input".into())),
    }
}

fn check_e7e8(q: &Quiver, c: &Common) -> Result<(), Failure> {
    if let Some((DynkinType::E, n)) = catalog::dynkin_type(q) {
        if n >= 7 && !c.enable_e7e8 {
            return Err(Failure::Engine(format!("E{n} needs --enable-e7e8")));
        }
    }
    Ok(())
}

/// Engine for commands that need a pool. Representation-infinite quivers
/// need an explicit depth.
fn engine(c: &Common) -> Result<Engine, Failure> {
    let q = load_quiver(c)?;
    check_e7e8(&q, c)?;
    let depth = match (q.is_dynkin(), c.depth) {
        (true, d) => d.unwrap_or(0),
        (false, Some(d)) => d,
        (false, None) => return Err(Failure::Usage(format!("{} is representation-infinite: --depth is required", q.name()))),
    };
    let mut e = Engine::for_quiver(Arc::new(q), depth)?;
    if let Some(w) = c.workers {
        e = e.with_workers(w);
    }
    Ok(e)
}

fn emit(c: &Common, text: &str) -> Result<(), Failure> {
    io::write_output(c.out.as_deref(), text).map_err(|e| match &c.out {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    })
}

fn reject_format(c: &Common, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&c.format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{command} does not support format {:?}", c.format)))
    }
}

fn module(e: &Engine, text: &str) -> Result<usize, Failure> {
    let dims = DimVector::parse(text).ok_or_else(|| Failure::Input(format!("bad dimension vector `{text}`")))?;
    if dims.0.len() != e.rank() {
        return Err(Failure::Input(format!("`{text}` has {} entries, expected {}", dims.0.len(), e.rank())));
    }
    e.module_by_dims(&dims).ok_or_else(|| Failure::Input(format!("no indecomposable with dimension vector {dims} in the pool")))
}

fn vertex(e: &Engine, id: &str) -> Result<usize, Failure> {
    e.quiver().vertex_index(id).ok_or_else(|| Failure::Input(format!("unknown vertex `{id}`")))
}

fn read_pair(e: &Engine, p: &PairArgs) -> Result<Pair, Failure> {
    let modules = p.modules.iter().map(|m| module(e, m)).collect::<Result<Vec<_>, _>>()?;
    let support = p.support.iter().map(|v| vertex(e, v)).collect::<Result<Vec<_>, _>>()?;
    Ok(Pair::new(modules, support))
}

fn enumerate(c: &Common) -> Result<(), Failure> {
    reject_format(c, &[Format::Json, Format::Csv], "enumerate")?;
    let e = engine(c)?;
    let mut en = e.enumerate();
    if c.tilting_only {
        en.pairs.retain(|p| e.is_tilting(p));
    }
    let text = match c.format {
        Format::Csv => io::enumeration_csv(&e, &en),
        _ => io::json_text(&io::enumeration_json(&e, &en)),
    };
    emit(c, &text)
}

fn graph(c: &Common) -> Result<(), Failure> {
    let e = engine(c)?;
    let mut mq: MutationQuiver = if e.is_exhaustive() {
        e.mutation_quiver()?
    } else {
        e.mutation_ball(&e.regular_pair()?, c.depth.unwrap_or(0))?
    };
    if c.tilting_only {
        mq = mq.tilting_subquiver();
    }
    let sat = e.saturation_report(&mq)?;
    let text = match c.format {
        Format::Json => io::json_text(&io::graph_json(&e, &mq, &sat)),
        Format::Dot => io::graph_dot(&e, &mq, &sat),
        Format::Csv => io::graph_csv(&e, &mq),
    };
    emit(c, &text)
}

fn mutate(c: &Common, p: &PairArgs, at: Option<&str>, at_vertex: Option<&str>) -> Result<(), Failure> {
    reject_format(c, &[Format::Json], "mutate")?;
    let e = engine(c)?;
    let pair = if p.modules.is_empty() && p.support.is_empty() { e.regular_pair()? } else { read_pair(&e, p)? };
    if !e.is_support_tau_tilting(&pair)? {
        return Err(Failure::Input(format!("{} is not a support tau-tilting pair", e.pair_label(&pair))));
    }
    let positions = match (at, at_vertex) {
        (Some(m), _) => vec![Summand::Module(module(&e, m)?)],
        (None, Some(v)) => vec![Summand::Projective(vertex(&e, v)?)],
        (None, None) => pair.summands(),
    };
    let mut out = Vec::new();
    for pos in positions {
        if !pair.contains(pos) {
            return Err(Failure::Input(format!("{} is not a summand of {}", e.summand_label(pos), e.pair_label(&pair))));
        }
        match e.mutate(&pair, pos) {
            Ok((_, rec)) => out.push(io::mutation_json(&e, &pair, &rec)),
            Err(EngineError::OutsidePool) => out.push(json!({ "removed": e.summand_label(pos), "result": null })),
            Err(err) => return Err(err.into()),
        }
    }
    let v = json!({ "algebra": e.quiver().name(), "pair": io::pair_json(&e, 0, &pair), "mutations": out });
    emit(c, &io::json_text(&v))
}

fn bongartz(c: &Common, p: &PairArgs) -> Result<(), Failure> {
    reject_format(c, &[Format::Json], "bongartz")?;
    let e = engine(c)?;
    let pair = read_pair(&e, p)?;
    if !pair.projectives.is_empty() {
        return Err(Failure::Usage("bongartz takes modules only".into()));
    }
    let by_extension = e.bongartz_completion_extension(&pair.modules)?;
    let by_torsion = if e.is_exhaustive() { Some(e.bongartz_completion_torsion(&pair.modules)?) } else { None };
    let v = json!({
        "algebra": e.quiver().name(),
        "modules": io::pair_json(&e, 0, &pair)["summand_dims"],
        "completion": io::pair_json(&e, 0, &by_extension),
        "torsion_completion": by_torsion.as_ref().map(|t| io::pair_json(&e, 0, t)),
        "agree": by_torsion.as_ref().map(|t| *t == by_extension),
    });
    emit(c, &io::json_text(&v))
}

fn complements(c: &Common, p: &PairArgs) -> Result<(), Failure> {
    reject_format(c, &[Format::Json], "complements")?;
    let e = engine(c)?;
    let pair = read_pair(&e, p)?;
    if !pair.projectives.is_empty() {
        return Err(Failure::Usage("complements takes modules only".into()));
    }
    let comp = e.complements_of_almost_complete(&pair.modules)?;
    let seq = match comp.complements.as_slice() {
        [a, b] => Some(e.exchange_sequence(*a, *b, &comp.almost)?),
        _ => None,
    };
    emit(c, &io::json_text(&io::complements_json(&e, &comp, seq.as_ref())))
}

fn coxeter(c: &Common) -> Result<(), Failure> {
    reject_format(c, &[Format::Json, Format::Csv], "coxeter")?;
    let q = load_quiver(c)?;
    let phi = q.coxeter_matrix();
    let text = match c.format {
        Format::Csv => io::int_matrix_csv(&phi),
        _ => io::json_text(&json!({
            "algebra": q.name(),
            "vertices": (0..q.n()).map(|v| q.vertex_id(v)).collect::<Vec<_>>(),
            "cartan": q.cartan_matrix().rows,
            "coxeter": phi.rows,
            "inverse_coxeter": q.inverse_coxeter_matrix().rows,
        })),
    };
    emit(c, &text)
}

fn verify(c: &Common, checks: &[Check], all: bool) -> Result<bool, Failure> {
    reject_format(c, &[Format::Json], "verify")?;
    let q = load_quiver(c)?;
    check_e7e8(&q, c)?;
    let selected = if all || checks.is_empty() { Check::applicable(&q) } else { checks.to_vec() };
    let opts = VerifyOptions { depth: c.depth, workers: c.workers, ..VerifyOptions::default() };
    let report = catalog::verify(Arc::new(q), &selected, &opts)?;
    eprint!("{}", report.summary());
    emit(c, &io::json_text(&report.to_json()))?;
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Enumerate(c) => enumerate(c).map(|_| true),
        Command::Graph(c) => graph(c).map(|_| true),
        Command::Mutate { common, pair, at, at_vertex } => mutate(common, pair, at.as_deref(), at_vertex.as_deref()).map(|_| true),
        Command::Bongartz { common, pair } => bongartz(common, pair).map(|_| true),
        Command::Complements { common, pair } => complements(common, pair).map(|_| true),
        Command::Coxeter(c) => coxeter(c).map(|_| true),
        Command::Verify { common, checks, all } => verify(common, checks, *all),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
