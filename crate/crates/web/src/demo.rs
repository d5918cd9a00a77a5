//! The demo's operations as plain functions, so they can be tested natively.

use serde::Serialize;
use tmdim::closed_forms::{beta_k_path, path_resolving_set};
use tmdim::constructions::{complete, complete_bipartite, cycle, path, s_tilde, star, u_graph};
use tmdim::io::{parse_edge_list, LabeledGraph};
use tmdim::trees::{beta_1_tree, locating_dominating_number, tree_metric_dimension, RootedTree};
use tmdim::truncation::{beta_k_exact, is_truncated_resolving, truncated_distance};
use tmdim::{DistanceMatrix, Graph};

pub const MAX_VERTICES: usize = 400;
/// Largest graph on which the page also runs the exact search.
pub const EXACT_LIMIT: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub x: f64,
    pub y: f64,
    pub landmark: bool,
    /// Truncated distances to the landmarks, in landmark order.
    pub vector: Vec<u32>,
    /// Some other vertex has the same vector.
    pub shared: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct View {
    pub k: u32,
    pub edges: Vec<[usize; 2]>,
    pub vertices: Vec<Vertex>,
    pub landmarks: Vec<usize>,
    pub resolving: bool,
    pub lines: Vec<String>,
}

fn view(lg: &LabeledGraph, d: &DistanceMatrix, set: &[usize], k: u32, layout: Vec<(f64, f64)>) -> View {
    let g = &lg.graph;
    let vectors: Vec<Vec<u32>> =
        (0..g.n()).map(|v| set.iter().map(|&r| truncated_distance(d.get(v, r), k)).collect()).collect();
    let vertices = (0..g.n())
        .map(|v| Vertex {
            id: v,
            label: lg.label(v).to_string(),
            x: layout[v].0,
            y: layout[v].1,
            landmark: set.contains(&v),
            vector: vectors[v].clone(),
            shared: vectors.iter().enumerate().any(|(u, w)| u != v && *w == vectors[v]),
        })
        .collect::<Vec<_>>();
    let resolving = vertices.iter().all(|v| !v.shared);
    View { k, edges: g.edges().map(|(u, v)| [u, v]).collect(), vertices, landmarks: set.to_vec(), resolving, lines: Vec::new() }
}

fn check_size(g: &Graph) -> Result<(), String> {
    if g.n() > MAX_VERTICES {
        return Err(format!("the demo draws at most {MAX_VERTICES} vertices (got {})", g.n()));
    }
    Ok(())
}

fn err(e: tmdim::Error) -> String {
    e.to_string()
}

/// Points on a horizontal line.
fn line_layout(n: usize) -> Vec<(f64, f64)> {
    (0..n).map(|i| ((i as f64 + 0.5) / n as f64, 0.5)).collect()
}

fn circle_layout(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
            (0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin())
        })
        .collect()
}

/// Layered drawing rooted at a centre: leaves take consecutive slots and
/// each parent sits over the middle of its children.
fn tree_layout(t: &Graph, d: &DistanceMatrix) -> Vec<(f64, f64)> {
    let n = t.n();
    let ecc = |v: usize| d.row(v).iter().copied().max().unwrap_or(0);
    let root = (0..n).min_by_key(|&v| ecc(v)).unwrap_or(0);
    let rt = RootedTree::new(t, root).expect("input is a tree");
    let mut x = vec![0.0; n];
    let mut slot = 0.0;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if rt.children(v).is_empty() {
            x[v] = slot;
            slot += 1.0;
        }
        stack.extend(rt.children(v).iter().rev());
    }
    for v in rt.post_order() {
        let kids = rt.children(v);
        if !kids.is_empty() {
            x[v] = kids.iter().map(|&c| x[c]).sum::<f64>() / kids.len() as f64;
        }
    }
    let depth = ecc(root).max(1) as f64;
    let width = slot.max(1.0);
    (0..n).map(|v| ((x[v] + 0.5) / width, 0.08 + 0.84 * d.get(root, v) as f64 / depth)).collect()
}

/// The minimum `k`-truncated resolving set of `P_n` built block by block.
pub fn path_demo(n: usize, k: u32) -> Result<View, String> {
    let g = path(n).map_err(err)?;
    check_size(&g)?;
    let set = path_resolving_set(n, k).map_err(err)?;
    let d = g.distance_matrix().map_err(err)?;
    let lg = LabeledGraph::unlabeled(g);
    let mut v = view(&lg, &d, &set, k, line_layout(n));
    v.lines.push(format!("beta_{k}(P_{n}) = {}", beta_k_path(n, k).map_err(err)?));
    v.lines.push(format!("blocks of 3k+2 = {} vertices, two landmarks each", 3 * k + 2));
    Ok(v)
}

/// Builds a named family and checks a landmark set typed by the user.
/// An empty `set` uses the construction's own landmarks when it has them.
pub fn verify_on_family(family: &str, a: usize, b: usize, k: u32, set: &str) -> Result<View, String> {
    let (g, hint, tree_like) = match family {
        "path" => (path(a).map_err(err)?, path_resolving_set(a, k).ok(), true),
        "cycle" => (cycle(a).map_err(err)?, None, false),
        "complete" => (complete(a).map_err(err)?, Some((1..a).collect()), false),
        "star" => (star(a).map_err(err)?, Some((2..a).collect()), true),
        "kst" => (complete_bipartite(a, b).map_err(err)?, None, false),
        "u" => {
            let c = u_graph(a, b, k).map_err(err)?;
            (c.graph, c.landmark_hint, false)
        }
        "stilde" => {
            let c = s_tilde(a, k).map_err(err)?;
            (c.graph, c.landmark_hint, true)
        }
        other => return Err(format!("unknown family '{other}'")),
    };
    check_size(&g)?;
    let n = g.n();
    let mut ids = parse_ids(set, n)?;
    if ids.is_empty() {
        ids = hint.unwrap_or_default();
    }
    let d = g.distance_matrix().map_err(err)?;
    let layout = if tree_like && g.is_path() {
        line_layout(n)
    } else if tree_like {
        tree_layout(&g, &d)
    } else {
        circle_layout(n)
    };
    let lg = LabeledGraph::unlabeled(g);
    let mut v = view(&lg, &d, &ids, k, layout);
    if !ids.is_empty() {
        let cert = is_truncated_resolving(&d, &ids, k).map_err(err)?;
        debug_assert_eq!(cert.resolving, v.resolving);
        v.lines.push(match cert.witness_pair {
            None => format!("{{{}}} is a {k}-truncated resolving set", join(&ids)),
            Some((x, y)) => format!("{x} and {y} have the same vector {:?}", v.vertices[x].vector),
        });
    } else {
        v.resolving = n == 1;
        v.lines.push("no landmarks chosen".into());
    }
    if n <= EXACT_LIMIT {
        let best = beta_k_exact(&d, k);
        v.lines.push(format!("beta_{k} = {} (for example {{{}}})", best.size, join(&best.set)));
    }
    Ok(v)
}

/// `beta_1`, the locating-dominating number and the metric dimension of a
/// tree given as an edge list; the drawing marks the `beta_1` set.
pub fn tree_beta1(text: &str) -> Result<View, String> {
    let lg = parse_edge_list(text).map_err(err)?;
    let t = &lg.graph;
    if t.n() == 0 || !t.is_tree() {
        return Err("input is not a tree".into());
    }
    check_size(t)?;
    let d = t.distance_matrix().map_err(err)?;
    let (size, set) = beta_1_tree(t).map_err(err)?;
    let mut v = view(&lg, &d, &set, 1, tree_layout(t, &d));
    v.lines.push(format!("beta_1 = {size}"));
    if t.n() >= 2 {
        v.lines.push(format!("locating-dominating number = {}", locating_dominating_number(t).map_err(err)?));
    }
    v.lines.push(format!("metric dimension = {}", tree_metric_dimension(t).map_err(err)?));
    Ok(v)
}

fn parse_ids(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let mut ids = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let id: usize = tok.parse().map_err(|_| format!("'{tok}' is not a vertex number"))?;
        if id >= n {
            return Err(format!("vertex {id} is out of range (the graph has {n} vertices)"));
        }
        ids.push(id);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids() {
        assert_eq!(parse_ids(" 3, 1 1,2 ", 4).unwrap(), vec![1, 2, 3]);
        assert!(parse_ids("4", 4).is_err());
        assert!(parse_ids("x", 4).is_err());
        assert!(parse_ids("", 4).unwrap().is_empty());
    }

    #[test]
    fn layouts_stay_in_the_unit_square() {
        let t = s_tilde(3, 2).unwrap().graph;
        let d = t.distance_matrix().unwrap();
        for (x, y) in tree_layout(&t, &d).into_iter().chain(circle_layout(7)).chain(line_layout(5)) {
            assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        }
    }
}
