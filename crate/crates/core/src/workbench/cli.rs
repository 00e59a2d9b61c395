//! Command-line front end. Exit codes: 0 success or yes, 1 no, 2 bad input,
//! 3 inconclusive.

use std::collections::{BTreeMap, BTreeSet};
use std::error::Error;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::gen::{gen_family, gen_path, gen_subtree, gen_tree, FamilyMode};
use super::{to_dot_annotated, DotView, Instance};
use crate::derive::{derive_graph, DeriveMode};
use crate::graph::{recognize, GraphError, Property, PropertyWitness, SimpleGraph};
use crate::mixed::{mixed_to_bushy, overlap_to_mixed, verify_mixed_partition};
use crate::oracle::{search_mixed_partition, search_overlap_rep, SearchBudget, SearchOutcome};
use crate::transforms::{check_property1, normalize_property1, TranscriptAction};
use crate::tree::{
    bushiness, classify_tree, is_covering_subtree, minimal_covering_subtree, tree_isomorphic,
    validate_family, SubtreeFamily, Tree, TreeError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Yes = 0,
    No = 1,
    BadInput = 2,
    Inconclusive = 3,
}

type Res = Result<Exit, Box<dyn Error>>;

#[derive(Parser, Debug)]
#[command(name = "treerep", version, about = "Subtree overlap representations on host trees")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Random tree, optionally with a random family on it.
    Gen(GenArgs),
    /// Adds the graph derived from the family.
    Derive {
        #[arg(long, default_value = "overlap")]
        mode: DeriveMode,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Brings the family into the normal form without single-vertex
    /// members, one-vertex intersections or shared leaves.
    Normalize {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Family plus covering subtree to a cochordal-mixed partition.
    ToMixed {
        /// Comma-separated vertices; defaults to the instance's cover.
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<String>>,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Partition plus certificate to a bushy covered family.
    FromMixed {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    Verify {
        #[arg(long, value_enum)]
        what: VerifyWhat,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    ClassifyTree {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    Recognize {
        #[arg(long)]
        property: Property,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Covered family -> partition -> bushy family -> overlap graph,
    /// compared with the original overlap graph.
    Roundtrip(RoundtripArgs),
    ExportDot {
        #[arg(long, value_enum, default_value = "tree")]
        view: ViewArg,
        /// Member to shade in the rep-highlight view.
        #[arg(long)]
        member: Option<String>,
        /// `vertex=text`, repeatable.
        #[arg(long = "note", value_parser = parse_note)]
        notes: Vec<(String, String)>,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, default_value_t = 8)]
    vertices: usize,
    /// Number of members; without it only a tree is generated.
    #[arg(long)]
    members: Option<usize>,
    #[arg(long, value_enum, default_value = "free")]
    mode: ModeArg,
    /// Size of the random cover in covered-by mode.
    #[arg(long)]
    cover_size: Option<usize>,
    /// Use a random path as the cover in covered-by mode.
    #[arg(long)]
    cover_path: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances to emit, one JSON document per line when above 1.
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args, Debug)]
struct RoundtripArgs {
    #[arg(long, default_value_t = 8)]
    vertices: usize,
    #[arg(long, default_value_t = 5)]
    members: usize,
    #[arg(long)]
    cover_size: Option<usize>,
    #[arg(long)]
    cover_path: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Time limit in seconds.
    #[arg(long, env = "TREEREP_BUDGET_SECONDS", default_value_t = 30)]
    budget: u64,
    #[arg(long, default_value_t = 7)]
    max_host_vertices: usize,
    #[arg(long, default_value_t = 6)]
    max_members: usize,
}

#[derive(Subcommand, Debug)]
enum CoverAction {
    /// Adds an inclusion-minimal covering subtree.
    Find {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Checks the instance's cover.
    Check {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum SearchTarget {
    Mixed {
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    Rep {
        #[command(flatten)]
        budget: BudgetArgs,
        /// Require a covering subtree that is a path on this many vertices.
        #[arg(long)]
        cover_path: Option<usize>,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    Free,
    SharedVertex,
    CoveredBy,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum VerifyWhat {
    Family,
    Property1,
    Mixed,
    Cover,
    Bushy,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ViewArg {
    Tree,
    Graph,
    RepHighlight,
}

fn parse_note(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(v, t)| (v.to_string(), t.to_string()))
        .ok_or_else(|| format!("expected vertex=text, got `{s}`"))
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return Exit::BadInput as i32;
            }
            let _ = write!(out, "{}", e.render());
            return Exit::Yes as i32;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Exit::BadInput as i32
        }
    }
}

fn read_instance(path: &PathBuf) -> Result<Instance, Box<dyn Error>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(Instance::parse(&text)?)
}

fn need<'a, T>(piece: &'a Option<T>, name: &str) -> Result<&'a T, Box<dyn Error>> {
    piece.as_ref().ok_or_else(|| format!("instance has no `{name}`").into())
}

fn valid_family(inst: &Instance) -> Result<&SubtreeFamily, Box<dyn Error>> {
    let f = need(&inst.family, "subtrees")?;
    let bad = validate_family(f);
    if !bad.is_empty() {
        return Err(TreeError::InvalidFamily(bad).into());
    }
    Ok(f)
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), Box<dyn Error>> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn verdict(yes: bool) -> Exit {
    if yes {
        Exit::Yes
    } else {
        Exit::No
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Res {
    match command {
        Command::Gen(a) => gen(a, out),
        Command::Derive { mode, input } => {
            let mut inst = read_instance(&input)?;
            let g = derive_graph(valid_family(&inst)?, mode);
            inst.graph = Some(g);
            inst.mixed = None;
            out.write_all(inst.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        Command::Cover { action } => cover(action, out),
        Command::Normalize { input } => {
            let inst = read_instance(&input)?;
            let n = normalize_property1(valid_family(&inst)?)?;
            let mut next = Instance::from_family(n.family);
            next.meta.insert("preprocessed_host".into(), tree_json(&n.preprocessed_host));
            next.meta.insert(
                "transcript".into(),
                Value::Array(n.transcript.iter().map(action_json).collect()),
            );
            out.write_all(next.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        Command::ToMixed { cover, input } => {
            let inst = read_instance(&input)?;
            let f = valid_family(&inst)?;
            let r: BTreeSet<String> = match cover {
                Some(c) => c.into_iter().collect(),
                None => need(&inst.cover, "cover")?.clone(),
            };
            let (p, cert) = overlap_to_mixed(f, &r)?;
            let mut next = Instance::from_family(cert);
            next.graph = Some(p.represented_graph());
            next.mixed = Some(p);
            out.write_all(next.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        Command::FromMixed { input } => {
            let inst = read_instance(&input)?;
            let p = need(&inst.mixed, "mixed")?;
            let cert = valid_family(&inst)?;
            let rep = mixed_to_bushy(p, cert)?;
            let mut next = Instance::from_family(rep.family);
            next.graph = inst.graph.clone();
            next.cover = Some(rep.cover);
            out.write_all(next.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        Command::Verify { what, input } => verify(what, &read_instance(&input)?, out),
        Command::ClassifyTree { input } => {
            let inst = read_instance(&input)?;
            let shapes: Vec<&str> = classify_tree(need(&inst.tree, "tree")?)
                .into_iter()
                .map(|s| s.name())
                .collect();
            emit(out, &json!({ "shapes": shapes }))?;
            Ok(Exit::Yes)
        }
        Command::Recognize { property, input } => {
            let inst = read_instance(&input)?;
            let g = need(&inst.graph, "graph")?;
            match recognize(g, property) {
                Ok(r) => {
                    emit(
                        out,
                        &json!({
                            "property": property.name(),
                            "holds": r.holds,
                            "witness": witness_json(&r.witness),
                        }),
                    )?;
                    Ok(verdict(r.holds))
                }
                Err(GraphError::OutOfDeskScale { vertices, limit }) => {
                    emit(
                        out,
                        &json!({
                            "property": property.name(),
                            "result": "inconclusive",
                            "reason": format!("{vertices} vertices exceed the limit {limit}"),
                        }),
                    )?;
                    Ok(Exit::Inconclusive)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Search { target } => search(target, out),
        Command::Roundtrip(a) => roundtrip(a, out),
        Command::ExportDot {
            view,
            member,
            notes,
            input,
        } => {
            let inst = read_instance(&input)?;
            let view = match view {
                ViewArg::Tree => DotView::Tree,
                ViewArg::Graph => DotView::Graph,
                ViewArg::RepHighlight => {
                    DotView::RepHighlight(member.ok_or("rep-highlight needs --member")?)
                }
            };
            let notes: BTreeMap<String, String> = notes.into_iter().collect();
            out.write_all(to_dot_annotated(&inst, &view, &notes)?.as_bytes())?;
            Ok(Exit::Yes)
        }
    }
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Res {
    for i in 0..a.count {
        let seed = a.seed.wrapping_add(i as u64);
        let t = gen_tree(a.vertices, seed)?;
        let mut meta = serde_json::Map::new();
        meta.insert("seed".into(), seed.into());
        meta.insert("vertices".into(), a.vertices.into());
        let mut inst = Instance {
            tree: Some(t.clone()),
            ..Default::default()
        };
        if let Some(k) = a.members {
            let mode = match a.mode {
                ModeArg::Free => FamilyMode::Free,
                ModeArg::SharedVertex => FamilyMode::SharedVertex,
                ModeArg::CoveredBy => {
                    let r = random_cover(&t, a.cover_size, a.cover_path, seed)?;
                    inst.cover = Some(r.clone());
                    FamilyMode::CoveredBy(r)
                }
            };
            inst.set_family(gen_family(&t, k, seed.wrapping_add(2), &mode)?);
            meta.insert("members".into(), k.into());
            meta.insert(
                "mode".into(),
                a.mode.to_possible_value().expect("named variant").get_name().into(),
            );
        }
        inst.meta = meta;
        if a.count == 1 {
            out.write_all(inst.to_json().as_bytes())?;
        } else {
            writeln!(out, "{}", inst.to_json_line())?;
        }
    }
    Ok(Exit::Yes)
}

fn random_cover(
    t: &Tree,
    size: Option<usize>,
    path: bool,
    seed: u64,
) -> Result<BTreeSet<String>, Box<dyn Error>> {
    let seed = seed.wrapping_add(1);
    if path {
        return Ok(gen_path(t, seed));
    }
    let size = size.unwrap_or((t.len() / 3).max(1)).min(t.len());
    Ok(gen_subtree(t, size, seed)?)
}

fn cover(action: CoverAction, out: &mut dyn Write) -> Res {
    match action {
        CoverAction::Find { input } => {
            let mut inst = read_instance(&input)?;
            let r = minimal_covering_subtree(valid_family(&inst)?);
            inst.cover = Some(r);
            out.write_all(inst.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        CoverAction::Check { input } => {
            let inst = read_instance(&input)?;
            let yes = is_covering_subtree(valid_family(&inst)?, need(&inst.cover, "cover")?)?;
            emit(out, &json!({ "covering": yes }))?;
            Ok(verdict(yes))
        }
    }
}

fn verify(what: VerifyWhat, inst: &Instance, out: &mut dyn Write) -> Res {
    let (ok, report) = match what {
        VerifyWhat::Family => {
            let bad = validate_family(need(&inst.family, "subtrees")?);
            (bad.is_empty(), debug_list(&bad))
        }
        VerifyWhat::Property1 => {
            let bad = check_property1(valid_family(inst)?);
            (bad.is_empty(), debug_list(&bad))
        }
        VerifyWhat::Mixed => {
            let r = verify_mixed_partition(need(&inst.mixed, "mixed")?, inst.family.as_ref());
            (r.is_valid(), debug_list(&r.violations))
        }
        VerifyWhat::Cover => {
            let yes = is_covering_subtree(valid_family(inst)?, need(&inst.cover, "cover")?)?;
            (yes, json!([]))
        }
        VerifyWhat::Bushy => {
            let r = bushiness(need(&inst.tree, "tree")?, need(&inst.cover, "cover")?)?;
            let flags: serde_json::Map<String, Value> =
                r.vertices.into_iter().map(|(v, b)| (v, b.into())).collect();
            (r.bushy, Value::Object(flags))
        }
    };
    emit(out, &json!({ "valid": ok, "details": report }))?;
    Ok(verdict(ok))
}

fn debug_list<T: std::fmt::Debug>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| format!("{x:?}").into()).collect())
}

fn budget_from(b: BudgetArgs) -> Result<SearchBudget, Box<dyn Error>> {
    Ok(SearchBudget::new(
        b.max_host_vertices,
        b.max_members,
        Duration::from_secs(b.budget),
    )?)
}

fn search(target: SearchTarget, out: &mut dyn Write) -> Res {
    let (inst, outcome) = match target {
        SearchTarget::Mixed { budget, input } => {
            let inst = read_instance(&input)?;
            let g = need(&inst.graph, "graph")?;
            let outcome = search_mixed_partition(g, &budget_from(budget)?)?;
            let found = outcome.found().map(|p| Instance {
                graph: Some(g.clone()),
                mixed: Some(p.clone()),
                ..Default::default()
            });
            (found, outcome.map_found())
        }
        SearchTarget::Rep {
            budget,
            cover_path,
            input,
        } => {
            let inst = read_instance(&input)?;
            let g = need(&inst.graph, "graph")?;
            let shape = cover_path
                .map(|n| Tree::path((1..=n.max(1)).map(|i| format!("r{i}"))))
                .transpose()?;
            let outcome = search_overlap_rep(g, &budget_from(budget)?, shape.as_ref())?;
            let found = outcome.found().map(|f| {
                let mut i = Instance::from_family(f.clone());
                i.graph = Some(g.clone());
                i
            });
            (found, outcome.map_found())
        }
    };
    match (inst, outcome) {
        (Some(i), _) => {
            out.write_all(i.to_json().as_bytes())?;
            Ok(Exit::Yes)
        }
        (None, SearchOutcome::Inconclusive { elapsed }) => {
            emit(
                out,
                &json!({ "result": "inconclusive", "elapsed_ms": elapsed.as_millis() as u64 }),
            )?;
            Ok(Exit::Inconclusive)
        }
        (None, _) => {
            emit(out, &json!({ "result": "none" }))?;
            Ok(Exit::No)
        }
    }
}

trait ForgetFound {
    fn map_found(self) -> SearchOutcome<()>;
}

impl<T> ForgetFound for SearchOutcome<T> {
    fn map_found(self) -> SearchOutcome<()> {
        match self {
            SearchOutcome::Found(_) => SearchOutcome::Found(()),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::Inconclusive { elapsed } => SearchOutcome::Inconclusive { elapsed },
        }
    }
}

/// Result of one generate, split, rebuild and compare cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub seed: u64,
    pub graph_preserved: bool,
    pub cover_isomorphic: bool,
    pub bushy: bool,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.graph_preserved && self.cover_isomorphic && self.bushy
    }
}

/// Covered family on a random tree, through the mixed partition and back.
pub fn roundtrip_once(
    vertices: usize,
    members: usize,
    cover_size: Option<usize>,
    cover_path: bool,
    seed: u64,
) -> Result<RoundtripReport, Box<dyn Error>> {
    let t = gen_tree(vertices, seed)?;
    let r = random_cover(&t, cover_size, cover_path, seed)?;
    let f = gen_family(&t, members, seed.wrapping_add(2), &FamilyMode::CoveredBy(r.clone()))?;
    let (p, cert) = overlap_to_mixed(&f, &r)?;
    let rep = mixed_to_bushy(&p, &cert)?;
    let before: SimpleGraph = derive_graph(&f, DeriveMode::Overlap);
    let after = derive_graph(&rep.family, DeriveMode::Overlap);
    let cover_tree = rep.family.host().induced(&rep.cover)?;
    Ok(RoundtripReport {
        seed,
        graph_preserved: before.same_labelled_graph(&after),
        cover_isomorphic: tree_isomorphic(&cover_tree, &t.induced(&r)?).is_some(),
        bushy: bushiness(rep.family.host(), &rep.cover)?.bushy,
    })
}

fn roundtrip(a: RoundtripArgs, out: &mut dyn Write) -> Res {
    let mut all = true;
    for i in 0..a.count {
        let seed = a.seed.wrapping_add(i as u64);
        let r = roundtrip_once(a.vertices, a.members, a.cover_size, a.cover_path, seed)?;
        all &= r.passed();
        writeln!(
            out,
            "{}",
            json!({
                "seed": r.seed,
                "graph_preserved": r.graph_preserved,
                "cover_isomorphic": r.cover_isomorphic,
                "bushy": r.bushy,
            })
        )?;
    }
    Ok(verdict(all))
}

fn tree_json(t: &Tree) -> Value {
    json!({
        "vertices": t.labels(),
        "edges": t.edges().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

fn action_json(a: &TranscriptAction) -> Value {
    match a {
        TranscriptAction::AddLeaf { attach, new } => {
            json!({ "action": "add-leaf", "attach": attach, "new": new })
        }
        TranscriptAction::EndPreprocessing => json!({ "action": "end-preprocessing" }),
        TranscriptAction::Subdivide(s) => json!({
            "action": "subdivide",
            "v": s.v,
            "w": s.w,
            "x": s.x,
            "absorb": s.absorb,
        }),
    }
}

fn witness_json(w: &PropertyWitness) -> Value {
    match w {
        PropertyWitness::PerfectEliminationOrder(order) => {
            json!({ "kind": "perfect-elimination-order", "order": order })
        }
        PropertyWitness::TransitiveOrientation(o) => json!({
            "kind": "transitive-orientation",
            "arcs": o.arc_labels().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        }),
        PropertyWitness::CliqueOrder(cliques) => json!({ "kind": "clique-order", "cliques": cliques }),
        PropertyWitness::None => json!({ "kind": "none" }),
    }
}
