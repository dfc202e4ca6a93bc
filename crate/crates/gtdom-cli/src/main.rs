//! `gtdom`: compute, verify, and explore Grundy total dominating sequences.
//!
//! Exit codes: 0 success (and, for `verify`, a legal sequence); 1 generic
//! failure (including an illegal sequence under `verify`); 2 input parse
//! errors; 3 graph too large for the exact search with no structural
//! algorithm applicable; 4 precondition failure of a forced `--algo`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gtdom::{
    bound_report, build_mdt, classify_leaf, generate, grundy_bdh, grundy_exact, grundy_forest,
    grundy_p4tidy, grundy_tree, io, is_modular, split_reduction, verify_sequence, FamilySpec,
    Graph, HeadSpec, LeafClass, LegalSequence, SpiderKind, SpiderSide, TwinKind,
    DEFAULT_VERTEX_CAP,
};

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "gtdom", version, about = "Grundy total domination solvers", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Algo {
    Forest,
    Tree,
    Bdh,
    P4tidy,
    Exact,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algo::Forest => "forest",
            Algo::Tree => "tree",
            Algo::Bdh => "bdh",
            Algo::P4tidy => "p4tidy",
            Algo::Exact => "exact",
        };
        f.write_str(name)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Grundy total domination number of a graph
    Compute {
        /// Graph in edge-list format
        file: PathBuf,
        /// Force the exact search (same as --algo exact)
        #[arg(long)]
        exact: bool,
        /// Force a specific algorithm instead of auto-dispatch
        #[arg(long)]
        algo: Option<Algo>,
        /// Vertex cap for the exact search
        #[arg(long)]
        cap: Option<usize>,
        /// Print the witness sequence and its footprint certificate
        #[arg(long)]
        witness: bool,
        /// Emit a machine-readable JSON report
        #[arg(long)]
        json: bool,
    },
    /// Verify a vertex sequence against a graph
    Verify {
        /// Graph in edge-list format
        graph: PathBuf,
        /// Sequence file: space-separated vertex ids on one line
        sequence: PathBuf,
    },
    /// Print the auxiliary invariants bounding the Grundy total domination number
    Bounds { file: PathBuf },
    /// Print the modular decomposition tree with leaf classifications
    Decompose { file: PathBuf },
    /// Classify a modular graph against the P4-tidy leaf catalogue
    Classify { file: PathBuf },
    /// Generate a named graph family in edge-list format
    Generate {
        /// Family: path, cycle, star, complete, prism, net, g5k,
        /// thin-spider, thick-spider, quasi-spider
        family: String,
        /// Family parameters (see README)
        params: Vec<String>,
        /// Spider head: empty, k1, k2, k2bar, p4
        #[arg(long, default_value = "empty")]
        head: String,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the split graph whose value doubles the input's
    ReduceSplit {
        file: PathBuf,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(2, format!("cannot read {}: {e}", path.display())))?;
    io::parse_edge_list(&text)
        .map_err(|e| CliError::new(2, format!("{}: {e}", path.display())))
}

fn read_sequence(path: &Path) -> CliResult<Vec<usize>> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(2, format!("cannot read {}: {e}", path.display())))?;
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| CliError::new(2, format!("{}: bad vertex id {tok:?}", path.display())))
        })
        .collect()
}

fn write_output(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::new(1, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Compute { file, exact, algo, cap, witness, json } => {
            let g = read_graph(&file)?;
            let forced = if exact { Some(Algo::Exact) } else { algo };
            let cap = cap.unwrap_or(DEFAULT_VERTEX_CAP);
            let (seq, dispatch) = match forced {
                Some(algo) => (run_forced(&g, algo, cap)?, Dispatch {
                    chosen: algo,
                    reason: "forced on the command line".into(),
                }),
                None => auto_dispatch(&g, cap)?,
            };
            report_compute(&g, &seq, &dispatch, witness, json);
            Ok(())
        }
        Command::Verify { graph, sequence } => {
            let g = read_graph(&graph)?;
            let order = read_sequence(&sequence)?;
            let verdict = verify_sequence(&g, &order)
                .map_err(|e| CliError::new(2, format!("{}: {e}", sequence.display())))?;
            println!("legal: {}", verdict.legal);
            if verdict.legal {
                println!("total_dominating: {}", verdict.total_dominating);
                println!("maximal: {}", verdict.maximal);
                Ok(())
            } else {
                println!("first_violation: {}", verdict.first_violation.expect("illegal verdict"));
                Err(CliError::new(1, "sequence is not legal"))
            }
        }
        Command::Bounds { file } => {
            let g = read_graph(&file)?;
            let report = bound_report(&g).map_err(|e| CliError::new(1, e.to_string()))?;
            println!("n = {}", g.n());
            println!("m = {}", g.edge_count());
            println!("tau = {}", report.tau);
            println!("nu = {}", report.nu);
            println!("nu_s = {}", report.nu_s);
            println!("nu_ss = {}", report.nu_ss);
            match report.gamma_t {
                Some(v) => println!("gamma_t = {v}"),
                None => println!("gamma_t = undefined (isolated vertex)"),
            }
            println!("eta = {}", report.eta);
            let delta: Vec<String> = report.delta.iter().map(|d| d.to_string()).collect();
            println!("delta_k (k=1..{}): {}", g.n(), delta.join(" "));
            Ok(())
        }
        Command::Decompose { file } => {
            let g = read_graph(&file)?;
            if g.n() == 0 {
                return Err(CliError::new(1, "empty graph has no decomposition tree"));
            }
            let tree = build_mdt(&g);
            print_mdt_node(&tree.root, 0);
            Ok(())
        }
        Command::Classify { file } => {
            let g = read_graph(&file)?;
            if g.n() == 0 {
                return Err(CliError::new(1, "empty graph"));
            }
            if !is_modular(&g) {
                return Err(CliError::new(
                    1,
                    "graph is not modular; run `decompose` to see its tree",
                ));
            }
            println!("{}", class_label(&classify_leaf(&g)));
            Ok(())
        }
        Command::Generate { family, params, head, output } => {
            let spec = parse_family(&family, &params, &head)?;
            let g = generate(&spec).map_err(|e| CliError::new(1, e.to_string()))?;
            let mut text = format!("# generated: {} {}\n", family, params.join(" "));
            text.push_str(&io::write_edge_list(&g));
            write_output(output.as_deref(), &text)
        }
        Command::ReduceSplit { file, output } => {
            let g = read_graph(&file)?;
            let (split, v1, v2) = split_reduction(&g).map_err(|e| CliError::new(1, e.to_string()))?;
            let mut text = format!(
                "# split reduction: stable copy {}..{}, clique copy {}..{}\n",
                v1[0],
                v1[v1.len() - 1],
                v2[0],
                v2[v2.len() - 1]
            );
            text.push_str(&io::write_edge_list(&split));
            write_output(output.as_deref(), &text)
        }
    }
}

/// Which algorithm answered, and why it was picked.
struct Dispatch {
    chosen: Algo,
    reason: String,
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

fn run_forced(g: &Graph, algo: Algo, cap: usize) -> CliResult<LegalSequence> {
    let precondition = |e: String| CliError::new(4, format!("--algo {algo}: {e}"));
    match algo {
        Algo::Tree => Ok(grundy_tree(g).map_err(|e| precondition(e.to_string()))?.0),
        Algo::Forest => grundy_forest(g).map_err(|e| precondition(e.to_string())),
        Algo::Bdh => grundy_bdh(g).map_err(|e| precondition(e.to_string())),
        Algo::P4tidy => grundy_p4tidy(g).map_err(|e| precondition(e.to_string())),
        Algo::Exact => {
            let r = grundy_exact(g, Some(cap)).map_err(|e| precondition(e.to_string()))?;
            Ok(LegalSequence::from_order(g, &r.witness).expect("oracle witness is legal"))
        }
    }
}

/// Cheapest-first dispatch: forest/tree, then the bipartite
/// distance-hereditary solver, then the P4-tidy solver, then the exact
/// search under the cap.
fn auto_dispatch(g: &Graph, cap: usize) -> CliResult<(LegalSequence, Dispatch)> {
    if is_forest(g) {
        if g.is_connected() && g.n() >= 2 {
            let (seq, _) = grundy_tree(g).expect("connected acyclic graph is a tree");
            return Ok((seq, Dispatch {
                chosen: Algo::Tree,
                reason: "input is a tree".into(),
            }));
        }
        let seq = grundy_forest(g).expect("acyclic graph is a forest");
        return Ok((seq, Dispatch { chosen: Algo::Forest, reason: "input is a forest".into() }));
    }
    if let Ok(seq) = grundy_bdh(g) {
        return Ok((seq, Dispatch {
            chosen: Algo::Bdh,
            reason: "input is bipartite distance-hereditary".into(),
        }));
    }
    if let Ok(seq) = grundy_p4tidy(g) {
        return Ok((seq, Dispatch { chosen: Algo::P4tidy, reason: "input is P4-tidy".into() }));
    }
    match grundy_exact(g, Some(cap)) {
        Ok(r) => {
            let seq = LegalSequence::from_order(g, &r.witness).expect("oracle witness is legal");
            Ok((seq, Dispatch {
                chosen: Algo::Exact,
                reason: format!("no structural class applies; {} vertices within cap {cap}", g.n()),
            }))
        }
        Err(e) => Err(CliError::new(
            3,
            format!("no structural algorithm applies and the exact search refused: {e}"),
        )),
    }
}

fn report_compute(g: &Graph, seq: &LegalSequence, dispatch: &Dispatch, witness: bool, json: bool) {
    if json {
        let footprints: Vec<serde_json::Value> = seq
            .footprint_pairs()
            .iter()
            .map(|&(v, u)| serde_json::json!([v, u]))
            .collect();
        let report = serde_json::json!({
            "n": g.n(),
            "gamma": seq.len(),
            "algorithm": dispatch.chosen.to_string(),
            "witness": seq.order(),
            "footprints": footprints,
        });
        println!("{report}");
        return;
    }
    println!("gamma_gr_t = {}", seq.len());
    println!("algorithm: {}", dispatch.chosen);
    println!("dispatch: {}", dispatch.reason);
    if witness {
        let order: Vec<String> = seq.order().iter().map(|v| v.to_string()).collect();
        println!("witness: {}", order.join(" "));
        println!("certificate:");
        for (v, u) in seq.footprint_pairs() {
            println!("{v} footprinted_by {u}");
        }
    }
}

fn class_label(class: &LeafClass) -> String {
    match class {
        LeafClass::Trivial => "trivial".into(),
        LeafClass::Cycle5 => "c5".into(),
        LeafClass::Path5 => "p5".into(),
        LeafClass::Path5Complement => "p5-complement".into(),
        LeafClass::Spider(p) => {
            let kind = match p.kind {
                SpiderKind::Thin => "thin",
                SpiderKind::Thick => "thick",
            };
            let quasi = match p.quasi {
                None => "none".into(),
                Some((side, twin)) => format!(
                    "{}-{}",
                    match side {
                        SpiderSide::Stable => "stable",
                        SpiderSide::Clique => "clique",
                    },
                    match twin {
                        TwinKind::True => "k2",
                        TwinKind::False => "k2bar",
                    }
                ),
            };
            format!("spider({kind}, r={}, quasi={quasi}, head={})", p.weight(), p.head.len())
        }
        LeafClass::NotP4Tidy => "not-p4-tidy".into(),
    }
}

fn print_mdt_node(node: &gtdom::MdtNode, depth: usize) {
    let indent = "  ".repeat(depth);
    match node {
        gtdom::MdtNode::Internal { op, left, right } => {
            let label = match op {
                gtdom::MdtOp::Union => "union",
                gtdom::MdtOp::Join => "join",
            };
            println!("{indent}{label}");
            print_mdt_node(left, depth + 1);
            print_mdt_node(right, depth + 1);
        }
        gtdom::MdtNode::Leaf { graph, vertex_map } => {
            let ids: Vec<String> = vertex_map.iter().map(|v| v.to_string()).collect();
            println!("{indent}leaf {{{}}} {}", ids.join(","), class_label(&classify_leaf(graph)));
        }
    }
}

fn parse_family(family: &str, params: &[String], head: &str) -> CliResult<FamilySpec> {
    let bad = |msg: String| CliError::new(1, msg);
    let numeric = |i: usize| -> CliResult<usize> {
        params
            .get(i)
            .ok_or_else(|| bad(format!("{family}: missing parameter {}", i + 1)))?
            .parse()
            .map_err(|_| bad(format!("{family}: parameter {:?} is not a number", params[i])))
    };
    let head_spec = || -> CliResult<HeadSpec> {
        match head {
            "empty" => Ok(HeadSpec::Empty),
            "k1" => Ok(HeadSpec::Complete(1)),
            "k2" => Ok(HeadSpec::Complete(2)),
            "k2bar" => Ok(HeadSpec::Edgeless(2)),
            "p4" => Ok(HeadSpec::Path(4)),
            other => Err(bad(format!("unknown head {other:?} (use empty, k1, k2, k2bar, p4)"))),
        }
    };
    match family {
        "path" => Ok(FamilySpec::Path { n: numeric(0)? }),
        "cycle" => Ok(FamilySpec::Cycle { n: numeric(0)? }),
        "star" => Ok(FamilySpec::Star { leaves: numeric(0)? }),
        "complete" => Ok(FamilySpec::Complete { n: numeric(0)? }),
        "prism" => Ok(FamilySpec::Prism { n: numeric(0)? }),
        "net" => Ok(FamilySpec::Net),
        "g5k" => Ok(FamilySpec::G5k { k: numeric(0)? }),
        "thin-spider" | "thin_spider" => {
            Ok(FamilySpec::ThinSpider { weight: numeric(0)?, head: head_spec()? })
        }
        "thick-spider" | "thick_spider" => {
            Ok(FamilySpec::ThickSpider { weight: numeric(0)?, head: head_spec()? })
        }
        "quasi-spider" | "quasi_spider" => {
            let kind = match params.first().map(String::as_str) {
                Some("thin") => SpiderKind::Thin,
                Some("thick") => SpiderKind::Thick,
                other => return Err(bad(format!("quasi-spider: expected thin|thick, got {other:?}"))),
            };
            let weight = numeric(1)?;
            let (side, twin) = match params.get(2).map(String::as_str) {
                Some("s_k2") => (SpiderSide::Stable, TwinKind::True),
                Some("s_k2bar") => (SpiderSide::Stable, TwinKind::False),
                Some("c_k2") => (SpiderSide::Clique, TwinKind::True),
                Some("c_k2bar") => (SpiderSide::Clique, TwinKind::False),
                other => {
                    return Err(bad(format!(
                        "quasi-spider: expected s_k2|s_k2bar|c_k2|c_k2bar, got {other:?}"
                    )))
                }
            };
            Ok(FamilySpec::QuasiSpider { kind, weight, side, twin, head: head_spec()? })
        }
        other => Err(bad(format!("unknown family {other:?}"))),
    }
}
