use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ramsey_trees::oracle::ScanReport;
use ramsey_trees::ramsey::TuranCertificate;
use ramsey_trees::turan::{ex_family, ex_generic_bounds};
use ramsey_trees::verify::{verify_ex, verify_frobenius, verify_ramsey, verify_witnesses, VerifyReport};
use ramsey_trees::{
    build_witness, ex_brute, from_graph6, ramsey_bounds, ramsey_bounds_for_graph, ramsey_brute, scan_conjecture,
    to_dot, to_graph6, validate_witness, Claim, Conjecture, Construction, Error, Graph, LeftGraph, SearchBudget,
    TreeFamily,
};

#[derive(Parser)]
#[command(name = "ramsey-trees", version)]
#[command(about = "Turán and Ramsey numbers for paths, stars and broom-like trees")]
#[command(group(ArgGroup::new("format").args(["json", "dot", "graph6"])))]
struct Cli {
    /// Emit JSON (the default)
    #[arg(long, global = true)]
    json: bool,

    /// Emit Graphviz DOT (witness and export only)
    #[arg(long, global = true)]
    dot: bool,

    /// Emit graph6 (witness and export only)
    #[arg(long, global = true)]
    graph6: bool,

    /// Node cap for exhaustive searches, summed over workers
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    /// Wall-clock cap for exhaustive searches
    #[arg(long, global = true, default_value_t = 600)]
    budget_seconds: u64,

    /// Largest order an exhaustive search may reach
    #[arg(long, global = true, default_value_t = 8)]
    max_order: usize,

    /// Worker threads for parallel searches (default: one per core)
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Turán number ex(p; T)
    Ex {
        /// path, star, tprime or tstar
        #[arg(long)]
        family: String,
        /// Order of the tree
        #[arg(short)]
        n: usize,
        /// Order of the host graph
        #[arg(short)]
        p: u64,
    },
    /// Bounds on r(G, T) with the statements that give them
    Ramsey {
        /// Tree tag such as `path:8`, `g6:<graph6>`, or `graph:<graph6>` for a connected graph
        #[arg(long)]
        left: String,
        /// Tree tag such as `tstar:11`
        #[arg(long)]
        right: String,
        /// Turán certificate `p:edges` meaning ex(p; G) <= edges, for `graph:` inputs
        #[arg(long = "cert")]
        certs: Vec<String>,
    },
    /// Build a witness graph from a recipe
    Witness {
        /// Recipe id, e.g. `clique-union`
        #[arg(long)]
        construction: String,
        /// Recipe parameters as a JSON object, e.g. '{"m":6,"n":8,"x":1,"y":1}'
        #[arg(long, default_value = "{}")]
        params: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Check both avoidance conditions
        #[arg(long)]
        validate: bool,
    },
    /// Cross-check formulas, bounds and recipes
    Verify(VerifyArgs),
    /// Run an exhaustive search directly
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Check an open inequality on every tree of one order
    Scan {
        /// tstar-maximizes-ex, ex-monotone-in-alpha2 or same-order-tstar-ramsey
        conjecture: String,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        p_max: usize,
        /// One record per line, then the summary
        #[arg(long)]
        jsonl: bool,
    },
    /// Write a tree or a recipe graph
    Export {
        /// Tree tag to export
        #[arg(conflicts_with = "construction", required_unless_present = "construction")]
        tree: Option<String>,
        #[arg(long)]
        construction: Option<String>,
        #[arg(long, default_value = "{}")]
        params: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Ex,
    Ramsey,
    Witnesses,
    Frobenius,
}

#[derive(Args)]
struct VerifyArgs {
    what: VerifyTarget,
    /// Smallest tree order (ex, ramsey) or smallest left order (witnesses)
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest tree order (ex, ramsey) or largest right order (witnesses)
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest host order for ex
    #[arg(long, default_value_t = 8)]
    p_max: usize,
    /// Largest left order for witnesses
    #[arg(long, default_value_t = 9)]
    m_max: usize,
    /// Exact Ramsey values up to this are also searched exhaustively
    #[arg(long, default_value_t = 6)]
    oracle_cap: u64,
    /// Largest generator for frobenius
    #[arg(long, default_value_t = 12)]
    max_part: u64,
    /// Largest target for frobenius
    #[arg(long, default_value_t = 200)]
    max_target: u64,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// ex(p; T) by branch and bound
    Ex {
        #[arg(long)]
        tree: String,
        #[arg(short)]
        p: usize,
    },
    /// r(T1, T2) by searching colorings
    Ramsey {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Graph6,
}

/// Exit status of a command that produced output.
#[derive(Clone, Copy)]
enum Outcome {
    Exact,
    Partial,
}

type CliResult = Result<Outcome, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(Outcome::Exact) => ExitCode::SUCCESS,
        Ok(Outcome::Partial) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

impl Cli {
    fn format(&self) -> Format {
        if self.dot {
            Format::Dot
        } else if self.graph6 {
            Format::Graph6
        } else {
            Format::Json
        }
    }

    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_order: self.max_order,
            max_nodes: self.budget_nodes.unwrap_or(u64::MAX),
            time_cap: Duration::from_secs(self.budget_seconds),
        }
    }

    /// Commands without a graph to draw accept only JSON.
    fn json_only(&self) -> Result<(), Error> {
        match self.format() {
            Format::Json => Ok(()),
            _ => Err(Error::InvalidArgument(
                "--dot and --graph6 apply only to witness and export".into(),
            )),
        }
    }
}

fn write_out(text: &str) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        // a closed reader is not our failure
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Error::Capacity(format!("writing output: {e}"))),
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    write_out(&format!("{text}\n"))
}

fn emit_graph(g: &Graph, format: Format, json: impl FnOnce() -> Value) -> Result<(), Error> {
    match format {
        Format::Json => emit(&json()),
        Format::Dot => write_out(&to_dot(g)),
        Format::Graph6 => write_out(&format!("{}\n", to_graph6(g))),
    }
}

fn outcome(exact: bool) -> Outcome {
    if exact {
        Outcome::Exact
    } else {
        Outcome::Partial
    }
}

fn parse_left(text: &str) -> Result<LeftGraph, Error> {
    match text.strip_prefix("graph:") {
        Some(g6) => {
            let g = from_graph6(g6)?;
            if !g.is_connected() {
                return Err(Error::InvalidArgument("left graph must be connected".into()));
            }
            Ok(LeftGraph::Connected(g))
        }
        None => Ok(LeftGraph::Tree(text.parse()?)),
    }
}

fn parse_cert(text: &str) -> Result<TuranCertificate, Error> {
    let bad = || Error::Parse(format!("expected `p:edges`, got `{text}`"));
    let (p, edges) = text.split_once(':').ok_or_else(bad)?;
    Ok(TuranCertificate {
        p: p.parse().map_err(|_| bad())?,
        edges: edges.parse().map_err(|_| bad())?,
    })
}

fn parse_construction(id: &str, params: &str) -> Result<Construction, Error> {
    let params: Value = serde_json::from_str(params).map_err(|e| Error::Parse(format!("--params: {e}")))?;
    serde_json::from_value(json!({ "construction_id": id, "params": params }))
        .map_err(|e| Error::Parse(format!("construction `{id}`: {e}")))
}

fn edge_list(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

fn run(cli: &Cli) -> CliResult {
    let budget = cli.budget();
    match &cli.command {
        Command::Ex { family, n, p } => {
            cli.json_only()?;
            let family = TreeFamily::from_str(&format!("{family}:{n}"))?;
            match ex_family(*p, &family) {
                Ok(value) => {
                    emit(&value)?;
                    Ok(Outcome::Exact)
                }
                Err(Error::Domain(reason)) => {
                    let bounds = ex_generic_bounds(*p, &family)?;
                    let exact = bounds.lower == bounds.upper;
                    emit(&json!({
                        "family": family,
                        "n": n,
                        "p": p,
                        "lower": bounds.lower,
                        "upper": bounds.upper,
                        "sharpened": bounds.sharpened,
                        "exact": exact,
                        "note": reason,
                    }))?;
                    Ok(outcome(exact))
                }
                Err(e) => Err(e),
            }
        }
        Command::Ramsey { left, right, certs } => {
            cli.json_only()?;
            let right: TreeFamily = right.parse()?;
            let certs = certs.iter().map(|c| parse_cert(c)).collect::<Result<Vec<_>, _>>()?;
            let bounds = match parse_left(left)? {
                LeftGraph::Tree(tree) if certs.is_empty() => ramsey_bounds(&tree, &right)?,
                LeftGraph::Tree(_) => {
                    return Err(Error::InvalidArgument(
                        "--cert applies only to `graph:` left inputs".into(),
                    ))
                }
                LeftGraph::Connected(g) => ramsey_bounds_for_graph(&g, &certs, &right, &budget)?,
            };
            emit(&bounds)?;
            Ok(outcome(bounds.exact))
        }
        Command::Witness {
            construction,
            params,
            left,
            right,
            validate,
        } => {
            let recipe = parse_construction(construction, params)?;
            let claim = Claim {
                left: parse_left(left)?,
                right: right.parse()?,
            };
            let witness = build_witness(recipe, claim)?;
            let report = if *validate {
                Some(validate_witness(&witness)?)
            } else {
                None
            };
            let passed = report.as_ref().map(|r| r.passed);
            emit_graph(&witness.graph, cli.format(), || {
                let mut doc = serde_json::to_value(witness.sidecar(passed)).expect("sidecar serializes");
                if let Some(report) = &report {
                    doc["validation"] = serde_json::to_value(report).expect("report serializes");
                }
                doc
            })?;
            Ok(outcome(passed != Some(false)))
        }
        Command::Verify(args) => {
            cli.json_only()?;
            let report = verify(args, &budget)?;
            emit(&json!({
                "what": report.what,
                "checked": report.checked,
                "mismatches": report.mismatches.len(),
                "details": report.mismatches,
            }))?;
            Ok(outcome(report.passed()))
        }
        Command::Oracle(op) => {
            cli.json_only()?;
            let result = match op {
                OracleCommand::Ex { tree, p } => {
                    let tree: TreeFamily = tree.parse()?;
                    ex_brute(*p, &tree.realize()?, &budget)
                        .map(|edges| json!({ "op": "ex", "tree": tree, "p": p, "edges": edges }))
                }
                OracleCommand::Ramsey { left, right } => {
                    let (left, right): (TreeFamily, TreeFamily) = (left.parse()?, right.parse()?);
                    ramsey_brute(&left.realize()?, &right.realize()?, &budget)
                        .map(|value| json!({ "op": "ramsey", "left": left, "right": right, "value": value }))
                }
            };
            match result {
                Ok(mut doc) => {
                    doc["complete"] = json!(true);
                    doc["budget"] = serde_json::to_value(budget).expect("budget serializes");
                    emit(&doc)?;
                    Ok(Outcome::Exact)
                }
                Err(Error::BudgetExceeded(reason)) => {
                    emit(&json!({ "complete": false, "reason": reason, "budget": budget }))?;
                    Ok(Outcome::Partial)
                }
                Err(e) => Err(e),
            }
        }
        Command::Scan {
            conjecture,
            n,
            p_max,
            jsonl,
        } => {
            cli.json_only()?;
            let which: Conjecture = conjecture.parse()?;
            let report = scan_conjecture(which, *n, *p_max, &budget)?;
            if *jsonl {
                write_out(&to_jsonl(&report))?;
            } else {
                emit(&report)?;
            }
            Ok(outcome(report.passed()))
        }
        Command::Export {
            tree,
            construction,
            params,
        } => {
            let (object, graph) = match (tree, construction) {
                (Some(tag), _) => {
                    let tree: TreeFamily = tag.parse()?;
                    (tree.to_string(), tree.realize()?)
                }
                (None, Some(id)) => {
                    let recipe = parse_construction(id, params)?;
                    (recipe.id().to_string(), recipe.expr()?.eval()?)
                }
                (None, None) => return Err(Error::InvalidArgument("nothing to export".into())),
            };
            emit_graph(&graph, cli.format(), || {
                json!({
                    "object": object,
                    "order": graph.order(),
                    "edge_count": graph.edge_count(),
                    "graph6": to_graph6(&graph),
                    "edges": edge_list(&graph),
                })
            })?;
            Ok(Outcome::Exact)
        }
    }
}

fn verify(args: &VerifyArgs, budget: &SearchBudget) -> Result<VerifyReport, Error> {
    match args.what {
        VerifyTarget::Ex => verify_ex(args.n_min.unwrap_or(3), args.n_max.unwrap_or(7), args.p_max, budget),
        VerifyTarget::Ramsey => verify_ramsey(
            args.n_min.unwrap_or(3),
            args.n_max.unwrap_or(12),
            args.oracle_cap,
            budget,
        ),
        VerifyTarget::Witnesses => verify_witnesses(args.n_min.unwrap_or(5), args.m_max, args.n_max.unwrap_or(14)),
        VerifyTarget::Frobenius => Ok(verify_frobenius(args.max_part, args.max_target)),
    }
}

fn to_jsonl(report: &ScanReport) -> String {
    let mut lines: Vec<String> = report.records.iter().map(|r| json!(r).to_string()).collect();
    lines.push(
        json!({
            "conjecture": report.conjecture,
            "n": report.n,
            "p_max": report.p_max,
            "checked": report.checked,
            "failures": report.failures,
        })
        .to_string(),
    );
    lines.join("\n") + "\n"
}
