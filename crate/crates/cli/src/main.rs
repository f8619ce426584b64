use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use toric_poset::antichains::{
    max_toric_chain, min_antichain_cover, min_chain_cover, toric_width, AntichainKind, AntichainOracle, Cover,
};
use toric_poset::closure::{closure_poset, graphs_between, toric_hasse};
use toric_poset::flips::{canonical, toric_posets, ToricPoset};
use toric_poset::geometry::sample_classes;
use toric_poset::graph::{enumerate_acyclic, Graph, Orientation};
use toric_poset::io::{
    cyclic_word_json, graph_json, orientation_dot, orientation_json, parse_graph, parse_orientation, poset_json,
    vertex_set_json,
};
use toric_poset::toric::{all_toric_chains, toric_total_extensions};
use toric_poset::tutte::{count_check, tutte};
use toric_poset::verify;

const MAX_N_VAR: &str = "TORIC_POSET_MAX_N";
const DEFAULT_MAX_N: usize = 10;

#[derive(Parser)]
#[command(name = "toric", version, about = "Toric partial orders of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every acyclic orientation.
    Acyc(Common),
    /// List the flip classes (toric posets) with their sizes.
    Classes(Common),
    /// The flip class of one orientation.
    ClassOf(Common),
    /// Toric transitive closure of a toric poset.
    #[command(alias = "toric-closure")]
    Closure(Common),
    /// Toric Hasse diagram of a toric poset.
    #[command(alias = "toric-hasse")]
    Hasse(Common),
    /// All toric chains with their cyclic orders.
    Chains(Common),
    /// Toric total extensions.
    Extensions(Common),
    /// All toric antichains of one kind.
    Antichains {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Combinatorial)]
        kind: Kind,
    },
    /// Largest antichain (or, with --kind chain, largest toric chain).
    Width {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Combinatorial)]
        kind: Kind,
    },
    /// Fewest antichains (or, with --kind chain, toric chains) covering
    /// the vertices.
    Cover {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Combinatorial)]
        kind: Kind,
    },
    /// Orientation and class counts against the Tutte polynomial.
    Count(Common),
    /// Sample random torus points and tally the classes they land in.
    Sample {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the exhaustive property suites.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Graph JSON file; reads stdin when omitted or `-`.
    graph: Option<PathBuf>,
    /// Orientation JSON file selecting one flip class.
    #[arg(long = "class-of", visible_alias = "orientation")]
    class_of: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Chain,
    Combinatorial,
    Geometric,
}

impl Kind {
    fn antichain(self) -> Option<AntichainKind> {
        match self {
            Kind::Chain => None,
            Kind::Combinatorial => Some(AntichainKind::Combinatorial),
            Kind::Geometric => Some(AntichainKind::Geometric),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Kind::Chain => "chain",
            Kind::Combinatorial => "combinatorial",
            Kind::Geometric => "geometric",
        }
    }
}

/// Bad input; exits with code 2.
struct Failure(String);

impl From<toric_poset::Error> for Failure {
    fn from(e: toric_poset::Error) -> Self {
        Failure(e.to_string())
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut violated = false;
    let result = run(cli.command, &mut violated);
    match result {
        Ok(out) => {
            let text = match out {
                Output::Json(v) => serde_json::to_string(&v).expect("serialisable") + "\n",
                Output::Text(s) => s,
            };
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var(MAX_N_VAR) {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure(format!("{MAX_N_VAR}: expected a vertex count, got {s:?}"))),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn load_graph(common: &Common) -> Result<Arc<Graph>, Failure> {
    let g = parse_graph(&read_input(common.graph.as_ref())?)?;
    let cap = max_n()?;
    if g.n() > cap {
        return Err(Failure(format!(
            "n: graph has {} vertices, above the {MAX_N_VAR} cap of {cap}",
            g.n()
        )));
    }
    Ok(Arc::new(g))
}

fn load_orientation(common: &Common, g: &Arc<Graph>) -> Result<Option<Orientation>, Failure> {
    let Some(path) = &common.class_of else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok(Some(parse_orientation(&text, g)?))
}

/// The selected class, or every class of the graph.
fn selected_posets(common: &Common, g: &Arc<Graph>) -> Result<(Vec<ToricPoset>, bool), Failure> {
    Ok(match load_orientation(common, g)? {
        Some(o) => (vec![canonical(&o)], true),
        None => (toric_posets(g), false),
    })
}

/// Applies `f` to each selected poset. One class gives `f`'s object;
/// several give `{"classes": [...]}` with the representative added to each.
fn per_poset(
    common: &Common,
    f: impl Fn(&ToricPoset) -> Result<Value, Failure>,
) -> Result<Output, Failure> {
    if common.format == Format::Dot {
        return Err(Failure("format: dot output is only available for orientations".into()));
    }
    let g = load_graph(common)?;
    let (posets, single) = selected_posets(common, &g)?;
    if single {
        return f(&posets[0]).map(Output::Json);
    }
    let mut all = Vec::with_capacity(posets.len());
    for p in &posets {
        let mut v = f(p)?;
        v["rep"] = orientation_json(p.rep())["arcs"].clone();
        all.push(v);
    }
    Ok(Output::Json(json!({ "classes": all })))
}

fn dots<'a>(items: impl IntoIterator<Item = &'a Orientation>) -> Output {
    Output::Text(items.into_iter().map(orientation_dot).collect())
}

fn arcs_of(o: &Orientation) -> Value {
    orientation_json(o)["arcs"].clone()
}

fn cover_json(kind: Kind, cover: &Cover, g: &Graph) -> Value {
    json!({
        "kind": kind.as_str(),
        "value": cover.value,
        "witness": cover.witness.iter().map(|&s| vertex_set_json(s, g)).collect::<Vec<_>>(),
    })
}

fn run(command: Command, violated: &mut bool) -> Result<Output, Failure> {
    match command {
        Command::Acyc(common) => {
            let g = load_graph(&common)?;
            let all = enumerate_acyclic(&g);
            if common.format == Format::Dot {
                return Ok(dots(&all));
            }
            Ok(Output::Json(json!({
                "count": all.len(),
                "orientations": all.iter().map(arcs_of).collect::<Vec<_>>(),
            })))
        }
        Command::Classes(common) => {
            let g = load_graph(&common)?;
            let posets = toric_posets(&g);
            if common.format == Format::Dot {
                return Ok(dots(posets.iter().map(|p| p.rep())));
            }
            Ok(Output::Json(json!({
                "count": posets.len(),
                "classes": posets
                    .iter()
                    .map(|p| json!({ "rep": arcs_of(p.rep()), "size": p.class_size() }))
                    .collect::<Vec<_>>(),
            })))
        }
        Command::ClassOf(common) => {
            let g = load_graph(&common)?;
            let o = load_orientation(&common, &g)?
                .ok_or_else(|| Failure("class-of: an orientation file is required".into()))?;
            let p = canonical(&o);
            if common.format == Format::Dot {
                return Ok(dots(p.class()));
            }
            Ok(Output::Json(json!({
                "rep": arcs_of(p.rep()),
                "size": p.class_size(),
                "members": p.class().iter().map(arcs_of).collect::<Vec<_>>(),
            })))
        }
        Command::Closure(common) | Command::Hasse(common) if common.class_of.is_none() => {
            Err(Failure("class-of: an orientation file is required".into()))
        }
        Command::Closure(common) => {
            let g = load_graph(&common)?;
            let o = load_orientation(&common, &g)?.expect("checked above");
            let closed = closure_poset(&canonical(&o));
            let full = Orientation::from_arcs(
                closed.graph().clone(),
                &toric_poset::closure::toric_closure(&o.to_arc_set())?.arcs().collect::<Vec<_>>(),
            )?;
            if common.format == Format::Dot {
                return Ok(dots([&full]));
            }
            Ok(Output::Json(json!({
                "graph": graph_json(closed.graph()),
                "arcs": arcs_of(&full),
                "poset": poset_json(&closed),
            })))
        }
        Command::Hasse(common) => {
            let g = load_graph(&common)?;
            let o = load_orientation(&common, &g)?.expect("checked above");
            let p = canonical(&o);
            let hasse = toric_hasse(&p);
            let reduced = o.restrict(hasse.graph())?;
            if common.format == Format::Dot {
                return Ok(dots([&reduced]));
            }
            let (lo, hi) = graphs_between(&p);
            Ok(Output::Json(json!({
                "graph": graph_json(hasse.graph()),
                "arcs": arcs_of(&reduced),
                "poset": poset_json(&hasse),
                "graphs_between": 1u64 << (hi.edge_count() - lo.edge_count()),
            })))
        }
        Command::Chains(common) => per_poset(&common, |p| {
            let g = p.graph();
            let mut chains: Vec<_> = all_toric_chains(p).into_iter().filter(|(s, _)| !s.is_empty()).collect();
            chains.sort_by_key(|(s, w)| (s.len(), w.labelled(g)));
            Ok(json!({
                "chains": chains.iter().map(|(_, w)| cyclic_word_json(w, g)).collect::<Vec<_>>(),
            }))
        }),
        Command::Extensions(common) => per_poset(&common, |p| {
            let ext: Vec<_> = toric_total_extensions(p)
                .iter()
                .map(|w| w.labelled(p.graph()))
                .collect();
            Ok(json!({ "extensions": ext }))
        }),
        Command::Antichains { common, kind } => per_poset(&common, |p| {
            let k = kind
                .antichain()
                .ok_or_else(|| Failure("kind: antichains needs combinatorial or geometric".into()))?;
            let g = p.graph();
            let mut sets = AntichainOracle::new(p).antichains(k);
            sets.retain(|s| !s.is_empty());
            sets.sort_by_key(|s| (s.len(), s.iter().map(|v| g.label(v)).collect::<Vec<_>>()));
            Ok(json!({
                "kind": kind.as_str(),
                "antichains": sets.iter().map(|&s| vertex_set_json(s, g)).collect::<Vec<_>>(),
            }))
        }),
        Command::Width { common, kind } => per_poset(&common, |p| {
            let best = match kind.antichain() {
                Some(k) => toric_width(p, k),
                None => max_toric_chain(p),
            };
            Ok(json!({
                "kind": kind.as_str(),
                "value": best.value,
                "witness": vertex_set_json(best.witness, p.graph()),
            }))
        }),
        Command::Cover { common, kind } => per_poset(&common, |p| {
            let cover = match kind.antichain() {
                Some(k) => min_antichain_cover(p, k),
                None => min_chain_cover(p),
            };
            Ok(cover_json(kind, &cover, p.graph()))
        }),
        Command::Count(common) => {
            let g = load_graph(&common)?;
            let c = count_check(&g);
            *violated = !c.passes();
            Ok(Output::Json(json!({
                "acyclic": c.acyclic,
                "t_2_0": c.t_2_0,
                "classes": c.classes,
                "t_1_0": c.t_1_0,
                "tutte": tutte(&g).to_string(),
                "pass": c.passes(),
            })))
        }
        Command::Sample { common, trials, seed } => {
            if trials == 0 {
                return Err(Failure("trials: must be at least 1".into()));
            }
            let g = load_graph(&common)?;
            let report = sample_classes(&g, trials, seed);
            Ok(Output::Json(json!({
                "trials": report.trials,
                "rejected": report.rejected,
                "classes": report
                    .hits
                    .iter()
                    .map(|(p, &hits)| json!({ "class_rep": arcs_of(p.rep()), "hits": hits }))
                    .collect::<Vec<_>>(),
            })))
        }
        Command::Verify { max_n: n } => {
            // Graph enumeration is limited to 11 vertices.
            let cap = max_n()?.min(11);
            if n > cap {
                return Err(Failure(format!("max-n: {n} is above the {MAX_N_VAR} cap of {cap}")));
            }
            let reports = verify::run_all(n);
            for r in &reports {
                eprintln!("{r}");
                for m in &r.messages {
                    eprintln!("  {m}");
                }
            }
            let passed = reports.iter().all(|r| r.passed());
            *violated = !passed;
            Ok(Output::Json(json!({
                "max_n": n,
                "passed": passed,
                "suites": reports
                    .iter()
                    .map(|r| json!({
                        "name": r.name,
                        "cases": r.cases,
                        "violations": r.violations,
                        "passed": r.passed(),
                    }))
                    .collect::<Vec<_>>(),
            })))
        }
    }
}
