//! Named graph families and the extremal constructions with their predicted
//! truncated dimensions.

use crate::closed_forms::{beta_k_path, path_resolving_set};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::truncation::is_truncated_resolving;

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(&edges, Some(n))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(&edges, Some(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edge_list(&edges, Some(n))
}

/// `S_n = K_{1, n-1}` with the center at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("star needs n >= 2"));
    }
    complete_bipartite(1, n - 1)
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(invalid("complete bipartite graph needs s, t >= 1"));
    }
    let edges: Vec<_> = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))).collect();
    Graph::from_edge_list(&edges, Some(s + t))
}

/// `G ∪ H`: `h`'s vertices are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges: Vec<_> = g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))).collect();
    Graph::from_edge_list(&edges, Some(off + h.n())).expect("relabelled edges stay valid")
}

/// `G + H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges: Vec<_> = disjoint_union(g, h).edges().collect();
    edges.extend((0..off).flat_map(|u| (0..h.n()).map(move |v| (u, v + off))));
    Graph::from_edge_list(&edges, Some(off + h.n())).expect("join edges stay valid")
}

/// `K_s + complement(K_t)`.
pub fn complete_split(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t < 2 {
        return Err(invalid("K_s + complement(K_t) needs s >= 1, t >= 2"));
    }
    Ok(join(&complete(s)?, &Graph::edgeless(t)))
}

/// `K_s + (K_1 ∪ K_t)`.
pub fn clique_join_isolated_clique(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(invalid("K_s + (K_1 ∪ K_t) needs s, t >= 1"));
    }
    Ok(join(&complete(s)?, &disjoint_union(&complete(1)?, &complete(t)?)))
}

/// The predicted `beta_k` of a construction and the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub k: u32,
    pub value: usize,
    pub formula: &'static str,
}

#[derive(Clone, Debug)]
pub struct LabeledConstruction {
    pub graph: Graph,
    /// The construction's canonical resolving set; always verified.
    pub landmark_hint: Option<Vec<usize>>,
    pub predicted_beta_k: Option<Prediction>,
    /// Vertex shared by the clique and the path in `U_{n,δ}`.
    pub junction: Option<usize>,
    pub warnings: Vec<String>,
}

impl LabeledConstruction {
    fn plain(graph: Graph) -> Self {
        LabeledConstruction { graph, landmark_hint: None, predicted_beta_k: None, junction: None, warnings: Vec::new() }
    }
}

/// `U_{n,δ}`: a path on `δ` vertices sharing one endpoint with `K_{n-δ+1}`.
///
/// Vertex 0 is the junction, path vertex `i` sits at distance `i` from it,
/// and the remaining clique vertices are `δ..n`. The landmark hint takes all
/// clique vertices but one, the path vertex at distance `min(k, δ-1)`, and
/// for long paths a path resolving set on the vertices at distance `2k+1`
/// and beyond; it is kept only if it verifies.
pub fn u_graph(n: usize, delta: usize, k: u32) -> Result<LabeledConstruction> {
    if delta == 0 || n <= delta {
        return Err(invalid(format!("U_{{n,δ}} needs n > δ >= 1 (got n = {n}, δ = {delta})")));
    }
    if k == 0 {
        return Err(invalid("U_{n,δ} landmarks need k >= 1"));
    }
    let mut edges: Vec<_> = (1..delta).map(|i| (i - 1, i)).collect();
    let clique: Vec<_> = std::iter::once(0).chain(delta..n).collect();
    for (i, &u) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
    }
    let graph = Graph::from_edge_list(&edges, Some(n))?;
    let predicted = beta_k_u_graph(n, delta, k)?;

    let mut hint: Vec<usize> = (delta + 1..n).collect();
    let reach = (k as usize).min(delta - 1);
    if reach > 0 {
        hint.push(reach);
    } else {
        // δ = 1: the graph is K_n and the pendant vertex is the junction.
        hint.push(0);
    }
    let tail_start = 2 * k as usize + 1;
    if delta > 2 * (k as usize + 1) {
        let tail = delta - tail_start;
        hint.extend(path_resolving_set(tail, k)?.into_iter().map(|i| tail_start + i));
    }
    hint.sort_unstable();
    hint.dedup();

    let mut c = LabeledConstruction::plain(graph);
    c.junction = Some(0);
    c.predicted_beta_k = Some(Prediction { k, value: predicted, formula: "n-δ (+ β_k(P_{δ-2k-1}) when δ > 2(k+1))" });
    let d = c.graph.distance_matrix()?;
    if is_truncated_resolving(&d, &hint, k)?.resolving {
        if hint.len() != predicted {
            c.warnings.push(format!(
                "landmark hint has {} vertices but the formula predicts {predicted}",
                hint.len()
            ));
        }
        c.landmark_hint = Some(hint);
    } else {
        c.warnings.push(format!("canonical landmark set {hint:?} does not resolve U_{{{n},{delta}}} at k = {k}"));
    }
    Ok(c)
}

/// `beta_k(U_{n,δ})`: `n - δ` when `δ <= 2(k+1)`, otherwise
/// `n - δ + beta_k(P_{δ-2k-1})`.
pub fn beta_k_u_graph(n: usize, delta: usize, k: u32) -> Result<usize> {
    if delta == 0 || n <= delta {
        return Err(invalid(format!("U_{{n,δ}} needs n > δ >= 1 (got n = {n}, δ = {delta})")));
    }
    if k == 0 {
        return Err(invalid("beta_k(U_{n,δ}) needs k >= 1"));
    }
    let k_us = k as usize;
    if delta <= 2 * (k_us + 1) {
        Ok(n - delta)
    } else {
        Ok(n - delta + beta_k_path(delta - 2 * k_us - 1, k)?)
    }
}

fn hang_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, len: usize) {
    let mut prev = from;
    for _ in 0..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
}

/// `1 + β(k+1) + (β-1)(k-1 + ⌊k²/4⌋)`.
pub fn s_tilde_order(beta: usize, k: u32) -> Result<usize> {
    if beta < 2 || k == 0 {
        return Err(invalid("S̃_{β,k} needs β >= 2, k >= 1"));
    }
    let k = k as usize;
    Ok(1 + beta * (k + 1) + (beta - 1) * (k - 1 + k * k / 4))
}

/// The tree `S̃_{β,k}` whose `k`-truncated dimension is `β`.
///
/// Vertex layout: landmarks `r_1..r_β` are `0..β`; then each landmark's
/// pendant path of length `k` (with one extra vertex past the end of
/// `r_1`'s); then, for each `j >= 2`, the `r_1`–`r_j` connector (length 2
/// when `k = 1`, else `k`) with a hanging path of length
/// `k - max(d(v, r_1), d(v, r_j))` off every internal connector vertex.
pub fn s_tilde(beta: usize, k: u32) -> Result<LabeledConstruction> {
    let expected = s_tilde_order(beta, k)?;
    let ku = k as usize;
    let mut edges = Vec::new();
    let mut next = beta;
    for r in 0..beta {
        let len = if r == 0 { ku + 1 } else { ku };
        hang_path(&mut edges, &mut next, r, len);
    }
    let span = if k == 1 { 2 } else { ku };
    for r in 1..beta {
        let mut prev = 0;
        for i in 1..span {
            let v = next;
            next += 1;
            edges.push((prev, v));
            hang_path(&mut edges, &mut next, v, ku.saturating_sub(i.max(span - i)));
            prev = v;
        }
        edges.push((prev, r));
    }
    let order = next;
    let graph = Graph::from_edge_list(&edges, Some(order))?;
    let landmarks: Vec<_> = (0..beta).collect();
    let d = graph.distance_matrix()?;
    if !is_truncated_resolving(&d, &landmarks, k)?.resolving {
        return Err(Error::Internal(format!("S̃_{{{beta},{k}}} landmark set does not resolve")));
    }
    let mut c = LabeledConstruction::plain(graph);
    if order != expected {
        c.warnings.push(format!(
            "built S̃_{{{beta},{k}}} has {order} vertices; the order formula gives {expected}"
        ));
    }
    c.landmark_hint = Some(landmarks);
    c.predicted_beta_k = Some(Prediction { k, value: beta, formula: "β_k(S̃_{β,k}) = β" });
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let s = star(5).unwrap();
        assert_eq!(s.leaves().len(), 4);
        assert_eq!(s.degree(0), 4);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(star(1).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn joins_and_unions() {
        let k1 = complete(1).unwrap();
        assert_eq!(join(&k1, &Graph::edgeless(3)), star(4).unwrap());
        let g = join(&complete(2).unwrap(), &disjoint_union(&k1, &complete(2).unwrap()));
        assert_eq!(g, clique_join_isolated_clique(2, 2).unwrap());
        assert_eq!((g.n(), g.edge_count()), (5, 1 + 1 + 2 * 3));
        let u = disjoint_union(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        assert!(!u.is_connected());
    }

    #[test]
    fn u_graph_shape() {
        let u = u_graph(9, 5, 1).unwrap();
        assert_eq!(u.graph.n(), 9);
        assert_eq!(u.graph.diameter().unwrap(), 5);
        let clique: Vec<_> = (0..9).filter(|&v| u.graph.degree(v) >= 4).collect();
        assert_eq!(clique.len(), 5);
        assert_eq!(u.junction, Some(0));

        let u = u_graph(6, 3, 1).unwrap();
        assert_eq!(u.graph.edge_count(), 2 + 6);
        assert!(u_graph(5, 5, 1).is_err());
    }

    #[test]
    fn u_graph_formula() {
        assert_eq!(beta_k_u_graph(9, 5, 1).unwrap(), 5);
        assert_eq!(beta_k_u_graph(6, 3, 1).unwrap(), 3);
        assert_eq!(beta_k_u_graph(13, 9, 1).unwrap(), 6);
    }

    #[test]
    fn s_tilde_orders() {
        assert_eq!(s_tilde_order(3, 4).unwrap(), 30);
        assert_eq!(s_tilde_order(2, 2).unwrap(), 9);
        assert_eq!(s_tilde_order(2, 1).unwrap(), 5);
        assert!(s_tilde_order(1, 1).is_err());
    }

    #[test]
    fn s_tilde_trees() {
        let s = s_tilde(3, 4).unwrap();
        assert!(s.graph.is_tree());
        assert_eq!(s.graph.n(), 30);
        assert!(s.warnings.is_empty());

        let s = s_tilde(2, 2).unwrap();
        assert_eq!(s.graph.n(), 9);
        let d = s.graph.distance_matrix().unwrap();
        let far: Vec<_> = (0..9).filter(|&v| d.get(v, 0) > 2 && d.get(v, 1) > 2).collect();
        assert_eq!(far.len(), 1);

        // The k = 1 connector has an internal vertex the order formula omits.
        let s = s_tilde(2, 1).unwrap();
        assert_eq!(s.graph.n(), 6);
        assert_eq!(s.warnings.len(), 1);
    }
}
