//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`). The process fails if any
//! criterion fails, except a criterion listed in `KNOWN_FAILURES`. Such a
//! criterion must still fail, and fail exactly in its documented way.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tmdim::closed_forms::*;
use tmdim::constructions::*;
use tmdim::enumerate::*;
use tmdim::trees::*;
use tmdim::truncation::*;
use tmdim::{DistanceMatrix, Graph};

/// Criterion 8 compares the `U_{n,δ}` formula with the oracle. For
/// n = δ+1 the clique is a single edge, the graph is `P_{δ+1}`, and the
/// formula is one short in some cases. Those are the only mismatches.
const KNOWN_FAILURES: &[u32] = &[8];

struct Verdict {
    pass: bool,
    detail: String,
    /// For known failures: whether the failure matches its description.
    as_documented: bool,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into(), as_documented: false }
    }
}

fn dm(g: &Graph) -> DistanceMatrix {
    g.distance_matrix().expect("connected")
}

fn exact(g: &Graph, k: u32) -> usize {
    beta_k_exact(&dm(g), k).size
}

/// Independent oracle: scan subsets by size with hashed vectors and no
/// cap on `k`.
fn naive_beta_k(d: &DistanceMatrix, k: u32) -> usize {
    let n = d.n();
    if n <= 1 {
        return n;
    }
    let mut masks: Vec<u32> = (1u32..1 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut seen = HashSet::new();
        let ok = (0..n).all(|v| seen.insert(set.iter().map(|&r| d.get(v, r).min(k + 1)).collect::<Vec<_>>()));
        if ok {
            return set.len();
        }
    }
    unreachable!("the full vertex set resolves")
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (elapsed <= limit, format!("{:.1}s of {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()))
}

fn graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| enumerate_connected_graphs(n).expect("supported order"))
}

fn c1_path_formula() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=14 {
        let p = path(n).unwrap();
        for k in 1..=4 {
            let (f, e) = (beta_k_path(n, k).unwrap(), exact(&p, k));
            if f != e {
                bad.push(format!("P_{n} k={k}: formula {f}, oracle {e}"));
            }
        }
    }
    let (fast, t) = within(start.elapsed(), Duration::from_secs(60));
    Verdict::new(bad.is_empty() && fast, format!("56 (n,k) pairs, {} mismatches {bad:?}, {t}", bad.len()))
}

fn c2_path_construction() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=60 {
        let d = dm(&path(n).unwrap());
        for k in 1..=6 {
            let set = path_resolving_set(n, k).unwrap();
            let ok = is_truncated_resolving(&d, &set, k).unwrap().resolving;
            if !ok || set.len() != beta_k_path(n, k).unwrap() {
                bad.push(format!("n={n} k={k}"));
            }
        }
    }
    let elapsed = start.elapsed();
    // The k = 1 sizes for n <= 20 against the oracle.
    let sizes: Vec<usize> = (1..=20).map(|n| path_resolving_set(n, 1).unwrap().len()).collect();
    let oracle: Vec<usize> = (1..=20).map(|n| exact(&path(n).unwrap(), 1)).collect();
    let (fast, t) = within(elapsed, Duration::from_secs(5));
    Verdict::new(
        bad.is_empty() && fast && sizes == oracle,
        format!("360 sets verified, {} bad {bad:?}; k=1 sizes n<=20 {sizes:?} match oracle: {}; {t}", bad.len(), sizes == oracle),
    )
}

fn c3_cycle_formula() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=14 {
        let c = cycle(n).unwrap();
        for k in 1..=4 {
            let (f, e) = (beta_k_cycle(n, k).unwrap(), exact(&c, k));
            if f != e {
                bad.push(format!("C_{n} k={k}: formula {f}, oracle {e}"));
            }
        }
    }
    let (fast, t) = within(start.elapsed(), Duration::from_secs(60));
    Verdict::new(bad.is_empty() && fast, format!("48 (n,k) pairs, {} mismatches {bad:?}, {t}", bad.len()))
}

fn c4_extremes() -> Verdict {
    let start = Instant::now();
    let (mut graphs, mut wrong) = (0, Vec::new());
    for n in 4..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            graphs += 1;
            let d = dm(&g);
            for k in 1..=2 {
                let b = beta_k_exact(&d, k).size;
                if (b == n - 1) != has_beta_k_n_minus_1(&g, k).unwrap() {
                    wrong.push(format!("{g:?} k={k} n-1"));
                }
                if (b == n - 2) != has_beta_k_n_minus_2(&g, k).unwrap().is_some() {
                    wrong.push(format!("{g:?} k={k} n-2"));
                }
            }
        }
    }
    let (fast, t) = within(start.elapsed(), Duration::from_secs(600));
    wrong.truncate(5);
    Verdict::new(wrong.is_empty() && fast, format!("{graphs} graphs x k in {{1,2}}, misclassified {wrong:?}, {t}"))
}

fn c5_beta_one() -> Verdict {
    let (mut checks, mut wrong) = (0, Vec::new());
    for n in 4..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let d = dm(&g);
            for k in 1..=3 {
                checks += 1;
                if (beta_k_exact(&d, k).size == 1) != has_beta_k_one(&g, k).unwrap() {
                    wrong.push(format!("{g:?} k={k}"));
                }
            }
        }
    }
    wrong.truncate(5);
    Verdict::new(wrong.is_empty(), format!("{checks} checks, disagreements {wrong:?}"))
}

fn c6_bounds() -> Verdict {
    let (mut checks, mut violations) = (0, Vec::new());
    for g in graphs_up_to(6).filter(|g| g.n() >= 2) {
        let d = dm(&g);
        let (n, delta) = (g.n(), d.diameter() as usize);
        for k in 0..=3 {
            checks += 1;
            let b = beta_k_exact(&d, k).size;
            let order = order_upper_bound(b, k).unwrap();
            if !order.saturated && (n as u64) > order.value {
                violations.push(format!("{g:?} k={k}: order bound {}", order.value));
            }
            if k >= 1 && b > diameter_upper_bound(n, delta, k).unwrap() {
                violations.push(format!("{g:?} k={k}: diameter bound"));
            }
        }
    }
    violations.truncate(5);
    Verdict::new(violations.is_empty(), format!("{checks} (graph,k) checks, violations {violations:?}"))
}

fn c7_monotone_stable() -> Verdict {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut graphs: Vec<Graph> = graphs_up_to(6).filter(|g| g.n() >= 2).collect();
    let enumerated = graphs.len();
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.0..0.5);
        graphs.push(random_connected_graph(n, p, &mut rng));
    }
    let mut violations = Vec::new();
    for g in &graphs {
        let d = dm(g);
        let delta = d.diameter();
        let values: Vec<usize> = (0..=delta + 3).map(|k| naive_beta_k(&d, k)).collect();
        if values.windows(2).take(delta as usize + 1).any(|w| w[1] > w[0]) {
            violations.push(format!("{g:?} not monotone: {values:?}"));
        }
        if values[delta as usize] != values[delta as usize + 3] {
            violations.push(format!("{g:?} not stable: {values:?}"));
        }
        if beta_k_exact(&d, delta + 3).size != values[delta as usize + 3] {
            violations.push(format!("{g:?} exact search disagrees with naive oracle"));
        }
    }
    violations.truncate(5);
    Verdict::new(
        violations.is_empty(),
        format!("{enumerated} enumerated + 200 random graphs, naive oracle, violations {violations:?}"),
    )
}

fn c8_u_construction() -> Verdict {
    let start = Instant::now();
    let (mut cases, mut mismatches) = (0, Vec::new());
    for n in 2..=11 {
        for delta in 1..n {
            for k in 1..=2 {
                cases += 1;
                let g = u_graph(n, delta, k).unwrap().graph;
                let (f, e) = (beta_k_u_graph(n, delta, k).unwrap(), exact(&g, k));
                if f != e {
                    mismatches.push((n, delta, k, f, e));
                }
            }
        }
    }
    let mut slack_bad = Vec::new();
    for n in 2..=20 {
        for delta in 1..n {
            for k in 1..=2 {
                let slack = diameter_upper_bound(n, delta, k).unwrap() as i64 - beta_k_u_graph(n, delta, k).unwrap() as i64;
                if !(0..=1).contains(&slack) {
                    slack_bad.push((n, delta, k, slack));
                }
            }
        }
    }
    let (fast, t) = within(start.elapsed(), Duration::from_secs(120));
    let as_documented = slack_bad.is_empty()
        && fast
        && !mismatches.is_empty()
        && mismatches.iter().all(|&(n, delta, _, f, e)| n == delta + 1 && e == f + 1);
    let shown: Vec<String> =
        mismatches.iter().map(|(n, d, k, f, e)| format!("U_{{{n},{d}}} k={k}: formula {f}, oracle {e}")).collect();
    Verdict {
        pass: mismatches.is_empty() && slack_bad.is_empty() && fast,
        detail: format!(
            "{cases} cases, {} formula/oracle mismatches {shown:?}; slack outside {{0,1}}: {slack_bad:?}; {t}",
            mismatches.len()
        ),
        as_documented,
    }
}

fn c9_s_tilde() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for (beta, k) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let c = s_tilde(beta, k).unwrap();
        let d = dm(&c.graph);
        let hint = c.landmark_hint.clone().unwrap();
        let resolves = is_truncated_resolving(&d, &hint, k).unwrap().resolving;
        let oracle = beta_k_exact(&d, k).size;
        ok &= resolves && hint.len() == beta && oracle == beta;
        notes.push(format!("S~({beta},{k}) n={} oracle {oracle}", c.graph.n()));
    }
    let big = s_tilde(3, 4).unwrap();
    let order_ok = big.graph.n() == s_tilde_order(3, 4).unwrap() && big.graph.n() == 30;
    notes.push(format!("S~(3,4) order {} vs formula 30", big.graph.n()));
    Verdict::new(ok && order_ok, notes.join("; "))
}

fn c10_tree_dp() -> Verdict {
    let start = Instant::now();
    let (mut trees, mut wrong, mut printed_wrong) = (0u64, Vec::new(), 0u64);
    for n in 1..=8 {
        for t in all_labeled_trees(n) {
            trees += 1;
            let e = exact(&t, 1);
            if beta_1_tree(&t).unwrap().0 != e {
                wrong.push(format!("{t:?}"));
            }
            if beta_1_tree_value(&t, InnerSumReading::AsPrinted).unwrap() != e {
                printed_wrong += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..500 {
        let t = random_tree(rng.gen_range(9..=14), &mut rng);
        trees += 1;
        if beta_1_tree(&t).unwrap().0 != exact(&t, 1) {
            wrong.push(format!("{t:?}"));
        }
    }
    let (fast, t) = within(start.elapsed(), Duration::from_secs(900));
    wrong.truncate(3);
    Verdict::new(
        wrong.is_empty() && fast,
        format!("{trees} trees, mismatches {wrong:?}; as-printed inner sum disagrees on {printed_wrong} trees; {t}"),
    )
}

struct TreeSweep {
    trees: u64,
    members: [u64; 2],
    tk_wrong: Vec<String>,
    divergent: u64,
    over_star: Vec<String>,
    elapsed: Duration,
}

fn sweep_trees_to_nine() -> TreeSweep {
    let start = Instant::now();
    let mut s = TreeSweep {
        trees: 0,
        members: [0; 2],
        tk_wrong: Vec::new(),
        divergent: 0,
        over_star: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in 2..=9 {
        for t in all_labeled_trees(n) {
            s.trees += 1;
            let d = dm(&t);
            for k in 1..=2u32 {
                let e = beta_k_exact(&d, k).size;
                if n > 2 && e > n - 2 {
                    s.over_star.push(format!("{t:?} k={k}: {e}"));
                }
                let verdict = tk_membership(&t, k).unwrap();
                s.divergent += u64::from(verdict.divergent_residuals);
                if verdict.is_member() {
                    s.members[k as usize - 1] += 1;
                    let got = tk_beta_k(&t, k).unwrap().size;
                    if got != e {
                        s.tk_wrong.push(format!("{t:?} k={k}: peel {got}, oracle {e}"));
                    }
                }
            }
        }
    }
    s.elapsed = start.elapsed();
    s
}

fn c11_tk(s: &TreeSweep) -> Verdict {
    // S_3 is P_3, whose centre has degree two.
    let mut stars_ok = !tk_membership(&star(3).unwrap(), 1).unwrap().is_member();
    for n in 4..=9 {
        for k in 1..=2 {
            let st = star(n).unwrap();
            stars_ok &= tk_membership(&st, k).unwrap().is_member() && tk_beta_k(&st, k).unwrap().size == n - 2;
        }
    }
    let wrong: Vec<_> = s.tk_wrong.iter().take(3).collect();
    Verdict::new(
        s.tk_wrong.is_empty() && stars_ok,
        format!(
            "{} trees, members k=1: {}, k=2: {}, peel/oracle mismatches {} {wrong:?}, divergent residuals {}, stars S_4..S_9 members with n-2: {stars_ok}; sweep {:.1}s",
            s.trees,
            s.members[0],
            s.members[1],
            s.tk_wrong.len(),
            s.divergent,
            s.elapsed.as_secs_f64()
        ),
    )
}

fn c12_star_max(s: &TreeSweep) -> Verdict {
    let shown: Vec<_> = s.over_star.iter().take(3).collect();
    Verdict::new(
        s.over_star.is_empty(),
        format!("{} trees x k in {{1,2}}, violations {shown:?} (shared sweep)", s.trees),
    )
}

fn c13_heuristic() -> Verdict {
    let mut problems = Vec::new();
    let mut runs = 0u64;
    let mut check = |g: &Graph, k: u32, problems: &mut Vec<String>| {
        let d = dm(g);
        runs += 1;
        match ich_heuristic(&d, k) {
            Ok(set) => {
                let ok = is_truncated_resolving(&d, &set, k).unwrap().resolving;
                if !ok || set.len() < beta_k_exact(&d, k).size {
                    problems.push(format!("{g:?} k={k}: {set:?}"));
                }
            }
            Err(e) => problems.push(format!("{g:?} k={k}: {e}")),
        }
    };
    for g in graphs_up_to(7) {
        for k in 1..=2 {
            check(&g, k, &mut problems);
        }
    }
    for g in connected_graph_classes(8).unwrap() {
        let delta = g.diameter().unwrap();
        for k in 1..=delta {
            check(&g, k, &mut problems);
        }
    }
    let mut ratios = Vec::new();
    let mut over = Vec::new();
    for n in 1..=14 {
        let d = dm(&path(n).unwrap());
        for k in 1..=4 {
            let (h, e) = (ich_heuristic(&d, k).unwrap().len(), beta_k_exact(&d, k).size);
            ratios.push(h as f64 / e as f64);
            if h > 2 * e {
                over.push(format!("P_{n} k={k}: {h} vs {e}"));
            }
        }
    }
    let worst = ratios.iter().cloned().fold(0.0, f64::max);
    problems.truncate(3);
    let soft = if over.is_empty() { "met".to_string() } else { format!("missed (non-fatal) {over:?}") };
    Verdict::new(
        problems.is_empty(),
        format!(
            "{runs} runs (labeled n<=7, k<=2; all classes n=8, k<=diameter), problems {problems:?}; paths n<=14 worst ratio {worst:.2}, 2x target {soft}"
        ),
    )
}

fn main() -> ExitCode {
    let mut lines = Vec::new();
    let mut unexpected = 0;
    let mut record = |id: u32, title: &str, run: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let v = run();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (v.pass, known) {
            (true, _) => "PASS",
            (false, true) if v.as_documented => "FAIL (known, as documented)",
            (false, _) => "FAIL",
        };
        if !(v.pass && !known) && !(known && !v.pass && v.as_documented) {
            unexpected += 1;
        }
        let line = format!("{tag:<28} {id:>2}. {title} [{:.1}s] {}", start.elapsed().as_secs_f64(), v.detail);
        println!("{line}");
        lines.push(line);
    };
    record(1, "path formula vs oracle", &mut c1_path_formula);
    record(2, "path construction verifies", &mut c2_path_construction);
    record(3, "cycle formula vs oracle", &mut c3_cycle_formula);
    record(4, "beta_k = n-1 / n-2 characterizations", &mut c4_extremes);
    record(5, "beta_k = 1 characterization", &mut c5_beta_one);
    record(6, "order and diameter bounds", &mut c6_bounds);
    record(7, "monotonicity and stabilization", &mut c7_monotone_stable);
    record(8, "U construction formula and slack", &mut c8_u_construction);
    record(9, "S~ construction", &mut c9_s_tilde);
    record(10, "beta_1 tree DP vs oracle", &mut c10_tree_dp);
    let sweep = sweep_trees_to_nine();
    record(11, "T_k peeling vs oracle", &mut || c11_tk(&sweep));
    record(12, "star maximality on trees", &mut || c12_star_max(&sweep));
    record(13, "ICH heuristic sanity", &mut c13_heuristic);
    println!("{} criteria, {unexpected} unexpected outcomes", lines.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
