//! The `tmdim` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 computation
//! budget exceeded, 4 theorem-check failure.

pub mod report;
pub mod sweep;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use tmdim::closed_forms::{beta_k_cycle, beta_k_path, path_resolving_set};
use tmdim::constructions::*;
use tmdim::io::{parse_edge_list, write_edge_list, LabeledGraph};
use tmdim::trees::{
    beta_1_tree, dp_tables, tk_beta_k, tk_membership_with_budget, tree_resolving_set, RootedTree, Table,
    TkOutcome, DEFAULT_TK_BUDGET,
};
use tmdim::truncation::{beta_k_exact, ich_heuristic, is_truncated_resolving, truncated_vector};
use tmdim::Graph;

pub use report::{Collision, InputSummary, Method, ResultSummary, RunReport};
use sweep::{run_sweep, Fault, SweepOptions};

pub const DEFAULT_EXACT_CAP: usize = 24;
pub const MAX_SWEEP_N: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Check(_) => 4,
        }
    }
}

impl From<tmdim::Error> for CliError {
    fn from(e: tmdim::Error) -> Self {
        match e {
            tmdim::Error::Internal(_) => CliError::Check(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "tmdim", version, about = "k-truncated metric dimension of graphs")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute beta_k and a minimum k-truncated resolving set.
    Compute(ComputeArgs),
    /// Check whether a set of labels is a k-truncated resolving set.
    Verify(VerifyArgs),
    /// Print a named graph family as an edge list.
    Generate(GenerateArgs),
    /// Tree algorithms.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Check the closed forms and characterizations against exact search.
    CheckTheorems(CheckArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Edge-list file, or `-` for standard input.
    pub input: PathBuf,
    #[arg(short, long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Recheck the size with the exact search.
    #[arg(long)]
    pub verify: bool,
    /// Run the exact search above the size cap.
    #[arg(long)]
    pub force_exact: bool,
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub exact_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Ich,
    Auto,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(short, long, default_value_t = 1)]
    pub k: u32,
    /// Comma-separated vertex labels.
    #[arg(long, value_delimiter = ',', required = true)]
    pub set: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub family: Family,
    /// Family parameters, e.g. `n` or `s t`.
    pub params: Vec<usize>,
    /// Truncation level for the predicted value and landmark hint.
    #[arg(short, long, default_value_t = 1)]
    pub k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Kst,
    KsKbar,
    KsK1Kt,
    U,
    Stilde,
}

#[derive(Debug, Subcommand)]
pub enum TreeCommand {
    /// beta_1 by dynamic programming.
    Beta1 { input: PathBuf },
    /// Locating-dominating number.
    Ld { input: PathBuf },
    /// Classic (untruncated) metric dimension from leg counts.
    Classic { input: PathBuf },
    /// beta_k by peeling, for members of the recursive family.
    Tk {
        input: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_TK_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, default_value_t = 2)]
    pub max_k: u32,
    /// Check the tree DP on all labeled trees up to this order.
    #[arg(long, default_value_t = 0)]
    pub trees: usize,
    /// Number of random connected graphs.
    #[arg(long, default_value_t = 100)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Stop after this many seconds and report the sweep as incomplete.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy()).collect::<Vec<_>>().join(" ");
    match dispatch(cli, &echo, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, echo: &str, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let json = cli.json;
    let (report, quantity) = match cli.command {
        Command::Compute(a) => (compute(&a, echo)?, "beta_k"),
        Command::Verify(a) => (verify(&a, echo)?, "set size"),
        Command::Generate(a) => {
            write_out(out, &generate(&a)?)?;
            return Ok(0);
        }
        Command::Tree(t) => tree(&t, echo)?,
        Command::CheckTheorems(a) => return check_theorems(&a, echo, json, out),
    };
    for w in &report.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let text = if json { report.to_json() + "\n" } else { report.to_text(quantity) };
    write_out(out, &text)?;
    Ok(0)
}

fn write_out(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("writing output: {e}")))
}

fn read_graph(path: &Path) -> CliResult<LabeledGraph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    let lg = parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if lg.graph.n() == 0 {
        return Err(CliError::Input(format!("{}: graph has no vertices", path.display())));
    }
    if !lg.graph.is_connected() {
        return Err(CliError::Input(format!("{}: graph is disconnected", path.display())));
    }
    Ok(lg)
}

fn summary(g: &Graph) -> CliResult<InputSummary> {
    Ok(InputSummary { n: g.n(), m: g.edge_count(), diameter: g.diameter()? })
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Vertices of a path graph from one end to the other.
fn path_order(g: &Graph) -> Vec<usize> {
    let Some(&start) = g.leaves().first() else {
        return vec![0];
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&u| u != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

struct Answer {
    size: usize,
    set: Option<Vec<usize>>,
    method: Method,
}

fn compute(a: &ComputeArgs, echo: &str) -> CliResult<RunReport> {
    let started = Instant::now();
    let lg = read_graph(&a.input)?;
    let g = &lg.graph;
    let n = g.n();
    let mut warnings = Vec::new();
    let exact_allowed = n <= a.exact_cap || a.force_exact;
    let d = g.distance_matrix()?;
    let answer = match a.method {
        MethodArg::Exact => {
            if !exact_allowed {
                return Err(CliError::Budget(format!(
                    "exact search capped at n <= {} (graph has {n} vertices); pass --force-exact to override",
                    a.exact_cap
                )));
            }
            let best = beta_k_exact(&d, a.k);
            Answer { size: best.size, set: Some(best.set), method: Method::Exact }
        }
        MethodArg::Ich => {
            let set = ich_heuristic(&d, a.k)?;
            Answer { size: set.len(), set: Some(set), method: Method::Heuristic }
        }
        MethodArg::Auto => auto(g, &d, a.k, exact_allowed, a.exact_cap, &mut warnings)?,
    };
    if let Some(set) = &answer.set {
        if !is_truncated_resolving(&d, set, a.k)?.resolving {
            return Err(CliError::Check(format!("returned set {:?} does not resolve", lg.labels_of(set))));
        }
    }
    let mut oracle_size = None;
    if a.verify {
        if !exact_allowed {
            warnings.push(format!("--verify skipped: n = {n} exceeds the exact cap {}", a.exact_cap));
        } else {
            let oracle = beta_k_exact(&d, a.k).size;
            let agrees = match answer.method {
                Method::Heuristic => answer.size >= oracle,
                _ => answer.size == oracle,
            };
            if !agrees {
                return Err(CliError::Check(format!(
                    "{} gave {} but exact search gives {oracle}",
                    answer.method.tag(),
                    answer.size
                )));
            }
            oracle_size = Some(oracle);
        }
    }
    Ok(RunReport {
        command: echo.to_string(),
        input: summary(g)?,
        k: Some(a.k),
        result: ResultSummary {
            size: answer.size,
            witness: answer.set.as_deref().map(|s| lg.labels_of(s)),
            resolving: None,
            collision: None,
            oracle_size,
        },
        method: Some(answer.method),
        elapsed_ms: report::millis(started),
        warnings,
    })
}

fn auto(
    g: &Graph,
    d: &tmdim::DistanceMatrix,
    k: u32,
    exact_allowed: bool,
    cap: usize,
    warnings: &mut Vec<String>,
) -> CliResult<Answer> {
    if k >= 1 && g.is_path() {
        let order = path_order(g);
        let mut set: Vec<usize> = path_resolving_set(g.n(), k)?.into_iter().map(|i| order[i]).collect();
        set.sort_unstable();
        return Ok(Answer { size: beta_k_path(g.n(), k)?, set: Some(set), method: Method::Formula });
    }
    if k >= 1 && is_cycle(g) {
        return Ok(Answer { size: beta_k_cycle(g.n(), k)?, set: None, method: Method::Formula });
    }
    if k == 1 && g.is_tree() {
        let (size, set) = beta_1_tree(g)?;
        return Ok(Answer { size, set: Some(set), method: Method::TreeDp });
    }
    if exact_allowed {
        let best = beta_k_exact(d, k);
        return Ok(Answer { size: best.size, set: Some(best.set), method: Method::Exact });
    }
    warnings.push(format!("n = {} exceeds the exact cap {cap}; the heuristic gives an upper bound", g.n()));
    let set = ich_heuristic(d, k)?;
    Ok(Answer { size: set.len(), set: Some(set), method: Method::Heuristic })
}

fn verify(a: &VerifyArgs, echo: &str) -> CliResult<RunReport> {
    let started = Instant::now();
    let lg = read_graph(&a.input)?;
    let mut ids = lg.ids(&a.set)?;
    ids.sort_unstable();
    ids.dedup();
    let d = lg.graph.distance_matrix()?;
    let cert = is_truncated_resolving(&d, &ids, a.k)?;
    let collision = match cert.witness_pair {
        Some((u, v)) => Some(Collision {
            pair: [lg.label(u).to_string(), lg.label(v).to_string()],
            vector: truncated_vector(&d, u, &ids, a.k)?.0,
        }),
        None => None,
    };
    Ok(RunReport {
        command: echo.to_string(),
        input: summary(&lg.graph)?,
        k: Some(a.k),
        result: ResultSummary {
            size: ids.len(),
            witness: Some(lg.labels_of(&ids)),
            resolving: Some(cert.resolving),
            collision,
            oracle_size: None,
        },
        method: None,
        elapsed_ms: report::millis(started),
        warnings: Vec::new(),
    })
}

fn params<const N: usize>(a: &GenerateArgs, names: [&str; N]) -> CliResult<[usize; N]> {
    a.params.as_slice().try_into().map_err(|_| {
        CliError::Usage(format!(
            "{:?} takes {N} parameter(s): {}",
            a.family.to_possible_value().expect("named").get_name(),
            names.join(" ")
        ))
    })
}

fn generate(a: &GenerateArgs) -> CliResult<String> {
    let k = a.k;
    let n_minus_2 = |g: &Graph| (g.n() >= 4 && k >= 1).then(|| (g.n() - 2, "n-2"));
    let (c, name) = match a.family {
        Family::Path => {
            let [n] = params(a, ["n"])?;
            let mut c = plain(path(n)?);
            if k >= 1 {
                c.landmark_hint = Some(path_resolving_set(n, k)?);
                c.predicted_beta_k = Some(Prediction { k, value: beta_k_path(n, k)?, formula: "path formula" });
            }
            (c, format!("P_{n}"))
        }
        Family::Cycle => {
            let [n] = params(a, ["n"])?;
            let mut c = plain(cycle(n)?);
            if k >= 1 {
                c.predicted_beta_k = Some(Prediction { k, value: beta_k_cycle(n, k)?, formula: "cycle formula" });
            }
            (c, format!("C_{n}"))
        }
        Family::Complete => {
            let [n] = params(a, ["n"])?;
            let mut c = plain(complete(n)?);
            if n >= 2 && k >= 1 {
                c.landmark_hint = Some((1..n).collect());
                c.predicted_beta_k = Some(Prediction { k, value: n - 1, formula: "n-1" });
            }
            (c, format!("K_{n}"))
        }
        Family::Star => {
            let [n] = params(a, ["n"])?;
            let mut c = plain(star(n)?);
            if let Some((value, formula)) = n_minus_2(&c.graph) {
                c.landmark_hint = Some((2..n).collect());
                c.predicted_beta_k = Some(Prediction { k, value, formula });
            }
            (c, format!("S_{n}"))
        }
        Family::Kst => {
            let [s, t] = params(a, ["s", "t"])?;
            let mut c = plain(complete_bipartite(s, t)?);
            if let Some((value, formula)) = n_minus_2(&c.graph) {
                c.landmark_hint = Some((1..s).chain(s + 1..s + t).collect());
                c.predicted_beta_k = Some(Prediction { k, value, formula });
            }
            (c, format!("K_{{{s},{t}}}"))
        }
        Family::KsKbar => {
            let [s, t] = params(a, ["s", "t"])?;
            let mut c = plain(complete_split(s, t)?);
            if let Some((value, formula)) = n_minus_2(&c.graph) {
                c.predicted_beta_k = Some(Prediction { k, value, formula });
            }
            (c, format!("K_{s} + complement(K_{t})"))
        }
        Family::KsK1Kt => {
            let [s, t] = params(a, ["s", "t"])?;
            let mut c = plain(clique_join_isolated_clique(s, t)?);
            if let Some((value, formula)) = n_minus_2(&c.graph) {
                c.predicted_beta_k = Some(Prediction { k, value, formula });
            }
            (c, format!("K_{s} + (K_1 ∪ K_{t})"))
        }
        Family::U => {
            let [n, delta] = params(a, ["n", "delta"])?;
            (u_graph(n, delta, k)?, format!("U_{{{n},{delta}}}"))
        }
        Family::Stilde => {
            let [beta, tk] = params(a, ["beta", "k"])?;
            let tk = u32::try_from(tk).map_err(|_| CliError::Usage("k is too large".into()))?;
            (s_tilde(beta, tk)?, format!("S~_{{{beta},{tk}}}"))
        }
    };
    let mut comments = vec![name];
    for w in &c.warnings {
        comments.push(format!("warning: {w}"));
    }
    if let Some(hint) = &c.landmark_hint {
        let d = c.graph.distance_matrix()?;
        let hk = c.predicted_beta_k.as_ref().map_or(k, |p| p.k);
        if is_truncated_resolving(&d, hint, hk)?.resolving {
            let ids: Vec<String> = hint.iter().map(usize::to_string).collect();
            comments.push(format!("landmark_hint: {}", ids.join(" ")));
        }
    }
    if let Some(p) = &c.predicted_beta_k {
        comments.push(format!("predicted beta_{}: {} ({})", p.k, p.value, p.formula));
    }
    Ok(write_edge_list(&LabeledGraph::unlabeled(c.graph), &comments))
}

fn plain(graph: Graph) -> LabeledConstruction {
    LabeledConstruction { graph, landmark_hint: None, predicted_beta_k: None, junction: None, warnings: Vec::new() }
}

fn read_tree(path: &Path) -> CliResult<LabeledGraph> {
    let lg = read_graph(path)?;
    if !lg.graph.is_tree() {
        return Err(CliError::Input(format!("{}: not a tree", path.display())));
    }
    Ok(lg)
}

fn tree(cmd: &TreeCommand, echo: &str) -> CliResult<(RunReport, &'static str)> {
    let started = Instant::now();
    let (lg, k, size, set, method, quantity) = match cmd {
        TreeCommand::Beta1 { input } => {
            let lg = read_tree(input)?;
            let (size, set) = beta_1_tree(&lg.graph)?;
            (lg, Some(1), size, set, Method::TreeDp, "beta_1")
        }
        TreeCommand::Ld { input } => {
            let lg = read_tree(input)?;
            if lg.graph.n() < 2 {
                return Err(CliError::Input("locating-dominating number needs at least two vertices".into()));
            }
            let tables = dp_tables(&RootedTree::new(&lg.graph, 0)?);
            let set = tables.witness(Table::R, 0).ok_or_else(|| CliError::Check("R(root) is infinite".into()))?;
            (lg, None, set.len(), set, Method::TreeDp, "locating-dominating number")
        }
        TreeCommand::Classic { input } => {
            let lg = read_tree(input)?;
            let set = tree_resolving_set(&lg.graph)?;
            (lg, None, set.len(), set, Method::Formula, "metric dimension")
        }
        TreeCommand::Tk { input, k, budget } => {
            let lg = read_tree(input)?;
            let verdict = tk_membership_with_budget(&lg.graph, *k, *budget)?;
            match verdict.outcome {
                TkOutcome::Member => {}
                TkOutcome::NotMember { condition, depth, residual, detail } => {
                    return Err(CliError::Input(format!(
                        "not a member at k = {k}: {condition:?} fails {depth} peel(s) down on {{{}}}: {detail}",
                        lg.labels_of(&residual).join(" ")
                    )));
                }
                TkOutcome::Undecided { budget } => {
                    return Err(CliError::Budget(format!("membership undecided within {budget} candidate sets")));
                }
            }
            let sol = tk_beta_k(&lg.graph, *k)?;
            (lg, Some(*k), sol.size, sol.set, Method::TkPeel, "beta_k")
        }
    };
    let d = lg.graph.distance_matrix()?;
    let check_k = k.unwrap_or(d.diameter());
    if lg.graph.n() > 1 && !is_truncated_resolving(&d, &set, check_k)?.resolving {
        return Err(CliError::Check(format!("returned set {:?} does not resolve", lg.labels_of(&set))));
    }
    let report = RunReport {
        command: echo.to_string(),
        input: summary(&lg.graph)?,
        k,
        result: ResultSummary {
            size,
            witness: Some(lg.labels_of(&set)),
            resolving: None,
            collision: None,
            oracle_size: None,
        },
        method: Some(method),
        elapsed_ms: report::millis(started),
        warnings: Vec::new(),
    };
    Ok((report, quantity))
}

fn check_theorems(a: &CheckArgs, echo: &str, json: bool, out: &mut dyn Write) -> CliResult<i32> {
    if a.max_n > MAX_SWEEP_N {
        return Err(CliError::Usage(format!("--max-n is limited to {MAX_SWEEP_N}")));
    }
    if a.max_k == 0 {
        return Err(CliError::Usage("--max-k must be at least 1".into()));
    }
    let time_limit = match a.time_limit {
        Some(t) if !(t >= 0.0 && t.is_finite()) => return Err(CliError::Usage("--time-limit must be >= 0".into())),
        t => t.map(Duration::from_secs_f64),
    };
    let opts = SweepOptions {
        max_n: a.max_n,
        max_k: a.max_k,
        trees: a.trees,
        random: a.random,
        seed: a.seed,
        time_limit,
        fault: a.inject_fault,
    };
    let report = run_sweep(opts, echo.to_string());
    let text = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_text()
    };
    write_out(out, &text)?;
    Ok(if report.failures() > 0 {
        4
    } else if !report.complete {
        3
    } else {
        0
    })
}
