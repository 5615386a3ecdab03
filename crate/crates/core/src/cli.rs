//! Command-line front end. [`run`] takes the argument list and the three
//! standard streams, so it can be driven from tests.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::construct::{
    bdh_check_forbidden, bdh_recognize, replay_bdh, replay_sp, sp_recognize_mapped, DefiningSequence,
    SpConstruction,
};
use crate::enumerate::{random_defining_sequence, random_sp_construction};
use crate::error::{Error, Result};
use crate::fundamental::{bdh_to_sp, first_tree, fundamental_graph, BinaryMatroid, SpanningTree};
use crate::graph::{BipartiteGraph, BipartiteJson, Multigraph};
use crate::multiflow::{brute_force_oracle, integral_certificates, FlowInstance};
use crate::pivot::{orbit, pivot, DEFAULT_ORBIT_CAP};
use crate::poly::{beta, gamma, interlace, tutte_graph, tutte_matroid, verify_identity};
use crate::structure::{
    chain_graph_orbit_search, dfs_tree_check, is_chain_graph, selfdual_outerplanar_check,
    supporting_arborescence,
};
use crate::Side;

pub const SCHEMA: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "fundgraph", version, about = "Bipartite distance-hereditary graphs, series-parallel graphs and their fundamental graphs")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Reject input graphs with more vertices than this
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    /// Maximum number of orbit members explored
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    orbit_cap: u64,
    /// Seed for random constructions
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print nothing on success; errors still go to stderr
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Recognize {
    Bdh,
    Sp,
    Outerplanar,
    Selfdual,
    Chain,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Build {
    Bdh,
    Sp,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Poly {
    Tutte,
    Interlace,
    Gamma,
    Beta,
    Identity,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Class {
    A,
    B,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide class membership, with a construction or witness
    Recognize { what: Recognize, input: Option<PathBuf> },
    /// Replay a defining sequence or SP construction (or a random one)
    Build {
        kind: Build,
        input: Option<PathBuf>,
        /// Generate a random construction of this size instead of reading one
        #[arg(long)]
        random: Option<usize>,
    },
    /// Fundamental graph of {"graph", "tree"}; the tree defaults to a greedy one
    Fundamental { input: Option<PathBuf> },
    /// SP realization of a BDH graph
    ToSp { input: Option<PathBuf> },
    /// Pivot on the edge uv
    Pivot { u: String, v: String, input: Option<PathBuf> },
    /// Pivot orbit up to isomorphism
    Orbit { input: Option<PathBuf> },
    /// Polynomials and invariants
    Poly { kind: Poly, input: Option<PathBuf> },
    /// Supporting arborescence certificate of a BDH graph
    Arborescence {
        #[arg(long, value_enum, default_value_t = Class::A)]
        class: Class,
        input: Option<PathBuf>,
    },
    /// Orientation making the given tree a DFS tree of a 2-isomorphic copy
    DfsCheck { input: Option<PathBuf> },
    /// Maximum multiflow and minimum multicut certificate
    Flow { input: Option<PathBuf> },
    /// Exhaustive flow and cut optima
    Oracle { input: Option<PathBuf> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyGraph {
    Bipartite(BipartiteGraph),
    Multi(Multigraph),
}

#[derive(Deserialize)]
struct HostTree {
    graph: Multigraph,
    tree: Option<Vec<String>>,
}

struct Output {
    json: Value,
    dot: Option<String>,
    text: Option<String>,
}

impl Output {
    fn json(json: Value) -> Self {
        Output { json, dot: None, text: None }
    }

    fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn read(&mut self, path: &Option<PathBuf>) -> Result<String> {
        let mut s = String::new();
        match path {
            Some(p) => {
                s = std::fs::read_to_string(p).map_err(|e| Error::input(format!("{}: {e}", p.display())))?;
            }
            None => {
                self.stdin.read_to_string(&mut s).map_err(|e| Error::input(format!("stdin: {e}")))?;
            }
        }
        Ok(s)
    }

    fn parse<T: for<'de> Deserialize<'de>>(&mut self, path: &Option<PathBuf>) -> Result<T> {
        let s = self.read(path)?;
        serde_json::from_str(&s).map_err(|e| Error::input(format!("malformed JSON: {e}")))
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n as u64 > self.cli.max_n {
            return Err(Error::capacity(format!("{n} vertices exceed --max-n {}", self.cli.max_n)));
        }
        Ok(())
    }

    fn bipartite(&mut self, path: &Option<PathBuf>) -> Result<BipartiteGraph> {
        let g: BipartiteGraph = self.parse(path)?;
        self.guard(g.vertex_count())?;
        Ok(g)
    }

    fn multigraph(&mut self, path: &Option<PathBuf>) -> Result<Multigraph> {
        let h: Multigraph = self.parse(path)?;
        self.guard(h.vertex_count())?;
        Ok(h)
    }

    fn host_tree(&mut self, path: &Option<PathBuf>) -> Result<(Multigraph, SpanningTree)> {
        let ht: HostTree = self.parse(path)?;
        self.guard(ht.graph.vertex_count())?;
        let tree = match ht.tree {
            Some(ids) => SpanningTree::new(&ht.graph, &ids)?,
            None => first_tree(&ht.graph)?,
        };
        Ok((ht.graph, tree))
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

fn bip(g: &BipartiteGraph) -> Value {
    to_value(&BipartiteJson::from(g.clone()))
}

fn execute(ctx: &mut Ctx) -> Result<Output> {
    let cli = ctx.cli;
    Ok(match &cli.command {
        Command::Recognize { what, input } => match what {
            Recognize::Bdh => {
                let g = ctx.bipartite(input)?;
                let seq = if g.is_connected() { bdh_recognize(&g)? } else { None };
                let check = bdh_check_forbidden(&g)?;
                Output::json(json!({
                    "bdh": seq.is_some(),
                    "sequence": seq,
                    "pattern": check.pattern.map(|p| p.name()),
                    "witness": check.witness,
                }))
            }
            Recognize::Sp => {
                let h = ctx.multigraph(input)?;
                let r = sp_recognize_mapped(&h)?;
                Output::json(json!({
                    "sp": r.is_some(),
                    "construction": r.as_ref().map(|r| &r.construction),
                    "vertex_map": r.as_ref().map(|r| &r.vertex_map),
                }))
            }
            Recognize::Outerplanar | Recognize::Selfdual => {
                let h = ctx.multigraph(input)?;
                let v = selfdual_outerplanar_check(&h)?;
                Output::json(to_value(&v))
            }
            Recognize::Chain => {
                let g = ctx.bipartite(input)?;
                let found = chain_graph_orbit_search(&g, cli.orbit_cap as usize)?;
                Output::json(json!({
                    "chain_graph": is_chain_graph(&g)?,
                    "pivot_equivalent_to_chain_graph": found.is_some(),
                    "chain": found.as_ref().map(|c| bip(&c.chain)),
                    "word": found.as_ref().map(|c| &c.word),
                }))
            }
        },
        Command::Build { kind, input, random } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            match kind {
                Build::Bdh => {
                    let seq: DefiningSequence = match random {
                        Some(n) => random_defining_sequence(&mut rng, (*n).max(1)),
                        None => ctx.parse(input)?,
                    };
                    let g = replay_bdh(&seq)?;
                    ctx.guard(g.vertex_count())?;
                    Output::json(json!({ "sequence": seq, "graph": bip(&g) })).with_dot(g.to_dot())
                }
                Build::Sp => {
                    let c: SpConstruction = match random {
                        Some(n) => random_sp_construction(&mut rng, *n),
                        None => ctx.parse(input)?,
                    };
                    let h = replay_sp(&c)?;
                    ctx.guard(h.vertex_count())?;
                    Output::json(json!({ "construction": c, "graph": h })).with_dot(h.to_dot())
                }
            }
        }
        Command::Fundamental { input } => {
            let (h, t) = ctx.host_tree(input)?;
            let g = fundamental_graph(&h, &t)?;
            Output::json(json!({ "tree": t, "graph": bip(&g) })).with_dot(g.to_dot())
        }
        Command::ToSp { input } => {
            let g = ctx.bipartite(input)?;
            let (h, t) = bdh_to_sp(&g)?;
            let dot = h.to_dot();
            Output::json(json!({ "graph": h, "tree": t })).with_dot(dot)
        }
        Command::Pivot { u, v, input } => {
            let g = ctx.bipartite(input)?;
            let p = pivot(&g, u, v)?;
            Output::json(json!({ "graph": bip(&p) })).with_dot(p.to_dot())
        }
        Command::Orbit { input } => {
            let g = ctx.bipartite(input)?;
            let o = orbit(&g, cli.orbit_cap as usize)?;
            Output::json(o.to_json()).with_dot(o.to_dot())
        }
        Command::Poly { kind, input } => match kind {
            Poly::Tutte => {
                let t = match ctx.parse::<AnyGraph>(input)? {
                    AnyGraph::Multi(h) => {
                        ctx.guard(h.vertex_count())?;
                        tutte_graph(&h)?
                    }
                    AnyGraph::Bipartite(g) => {
                        ctx.guard(g.vertex_count())?;
                        tutte_matroid(&BinaryMatroid::from_bipartite(&g)?)?
                    }
                };
                let text = t.to_string();
                Output::json(json!({ "tutte": t.to_json(), "text": text })).with_text(text)
            }
            Poly::Interlace => {
                let q = interlace(&ctx.bipartite(input)?)?;
                let text = q.to_string();
                Output::json(json!({ "interlace": q.to_json(), "text": text })).with_text(text)
            }
            Poly::Gamma => {
                let v = gamma(&ctx.bipartite(input)?)?;
                Output::json(json!({ "gamma": v.to_string() })).with_text(v.to_string())
            }
            Poly::Beta => {
                let v = beta(&ctx.multigraph(input)?)?;
                Output::json(json!({ "beta": v.to_string() })).with_text(v.to_string())
            }
            Poly::Identity => {
                let r = verify_identity(&ctx.bipartite(input)?)?;
                let text = format!(
                    "interlace: {}\nmatroid diagonal: {}\ngraph diagonal: {}\n",
                    r.interlace,
                    r.matroid_diagonal,
                    r.graph_diagonal.as_ref().map_or("none".to_string(), |p| p.to_string())
                );
                Output::json(to_value(&r)).with_text(text)
            }
        },
        Command::Arborescence { class, input } => {
            let g = ctx.bipartite(input)?;
            let side = match class {
                Class::A => Side::A,
                Class::B => Side::B,
            };
            let cert = supporting_arborescence(&g, side)?;
            let dot = cert.arborescence.to_dot();
            Output::json(to_value(&cert)).with_dot(dot)
        }
        Command::DfsCheck { input } => {
            let (h, t) = ctx.host_tree(input)?;
            let o = dfs_tree_check(&h, &t)?;
            let dot = o.as_ref().map(|o| {
                let mut s = o.host.to_dot().replacen("graph G", "digraph G", 1);
                s = s.replace(" -- ", " -> ");
                s
            });
            let out = Output::json(json!({ "dfs_tree": o.is_some(), "orientation": o }));
            match dot {
                Some(d) => out.with_dot(d),
                None => out,
            }
        }
        Command::Flow { input } => {
            let inst: FlowInstance = ctx.parse(input)?;
            ctx.guard(inst.host().vertex_count())?;
            Output::json(to_value(&integral_certificates(&inst)?))
        }
        Command::Oracle { input } => {
            let inst: FlowInstance = ctx.parse(input)?;
            ctx.guard(inst.host().vertex_count())?;
            let (flow, cut) = brute_force_oracle(&inst)?;
            Output::json(json!({ "max_flow": flow, "min_cut": cut }))
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Precondition(_) | Error::Domain { .. } => 2,
        Error::Capacity(_) | Error::OrbitCap { .. } => 3,
        Error::Internal(_) => 4,
    }
}

fn error_json(kind: &str, message: String, extra: Option<(&str, Value)>) -> Value {
    let mut err = json!({ "kind": kind, "message": message });
    if let Some((k, v)) = extra {
        err[k] = v;
    }
    json!({ "schema": SCHEMA, "error": err })
}

fn report(e: &Error, stderr: &mut dyn Write) -> i32 {
    let extra = match e {
        Error::Domain { witness: Some(w), .. } => Some(("witness", json!(w))),
        Error::OrbitCap { partial, .. } => Some(("partial_orbit_size", json!(partial.len()))),
        _ => None,
    };
    let _ = writeln!(stderr, "{}", error_json(e.kind(), e.to_string(), extra));
    exit_code(e)
}

fn text_of(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            if k == "schema" {
                continue;
            }
            match x {
                Value::String(t) => s.push_str(&format!("{k}: {t}\n")),
                other => s.push_str(&format!("{k}: {other}\n")),
            }
        }
    }
    s
}

/// Runs the command line `args` (program name first) and returns the exit code:
/// 0 on success, 2 for input, precondition and domain errors, 3 when a size
/// guard or the orbit cap is exceeded, 4 when an internal invariant fails.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.render().to_string();
            let _ = writeln!(stderr, "{}", error_json("input", msg.trim().to_string(), None));
            return 2;
        }
    };
    let mut ctx = Ctx { cli: &cli, stdin };
    let out = match execute(&mut ctx) {
        Ok(o) => o,
        Err(e) => return report(&e, stderr),
    };
    if cli.quiet {
        return 0;
    }
    let mut json = out.json;
    if let Value::Object(map) = &mut json {
        map.insert("schema".into(), Value::String(SCHEMA.into()));
    }
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json values render") + "\n",
        Format::Dot => match out.dot {
            Some(d) => d,
            None => return report(&Error::input("this command has no DOT output"), stderr),
        },
        Format::Text => out.text.map(|t| if t.ends_with('\n') { t } else { t + "\n" }).unwrap_or_else(|| text_of(&json)),
    };
    if stdout.write_all(rendered.as_bytes()).is_err() {
        return 4;
    }
    0
}
