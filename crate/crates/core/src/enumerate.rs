//! Exhaustive and random small-graph generation for the brute-force oracles.

use rand::Rng;

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_connected_graphs`]; 2^21 edge
/// subsets at n = 7, 2^28 at n = 8.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every labeled connected simple graph on `n` vertices, once each.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(invalid(format!(
            "connected-graph enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER} \
             (2^(n(n-1)/2) edge subsets are scanned); got n = {n}"
        )));
    }
    Ok(ConnectedGraphs::new(n))
}

/// Iterator over the connected members of all `2^(n(n-1)/2)` edge subsets.
///
/// Construct directly through [`ConnectedGraphs::new`] to bypass the order
/// limit when the caller accepts the cost.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    pub fn new(n: usize) -> Self {
        assert!(n <= 11, "edge-subset enumeration beyond n = 11 does not fit a u64 mask");
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let end = 1u64 << pairs.len();
        ConnectedGraphs { n, pairs, next: 0, end }
    }

    fn connected(&self, mask: u64) -> bool {
        let mut adj = [0u16; 16];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let all = ((1u32 << self.n) - 1) as u16;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                let edges: Vec<_> = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                return Some(Graph::from_edge_list(&edges, Some(self.n)).expect("valid pairs"));
            }
        }
        None
    }
}

/// Largest order accepted by [`connected_graph_classes`].
pub const MAX_CLASS_ORDER: usize = 8;

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices, each in canonical labeling, ordered by canonical code.
pub fn connected_graph_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CLASS_ORDER {
        return Err(invalid(format!("isomorphism classes are generated for 1 <= n <= {MAX_CLASS_ORDER}; got n = {n}")));
    }
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each class on n-1 vertices by one vertex reaches all.
    let mut codes = std::collections::BTreeSet::from([0u64]);
    for m in 2..=n {
        let mut next = std::collections::BTreeSet::new();
        for &code in &codes {
            let mut adj = decode(code, m - 1);
            adj.push(0);
            for nb in 1u16..1 << (m - 1) {
                for (v, row) in adj[..m - 1].iter_mut().enumerate() {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    } else {
                        *row &= !(1 << (m - 1));
                    }
                }
                adj[m - 1] = nb;
                next.insert(canonical_code(&adj));
            }
        }
        codes = next;
    }
    Ok(codes
        .into_iter()
        .map(|code| {
            let adj = decode(code, n);
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u] >> v & 1 == 1).collect();
            Graph::from_edge_list(&edges, Some(n)).expect("decoded pairs are valid")
        })
        .collect())
}

/// Canonical code of a graph on at most 11 vertices: the least
/// upper-triangle bit string over all orderings compatible with the
/// colour-refined partition.
pub fn canonical_code_of(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical codes are 64-bit");
    let adj: Vec<u16> = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect();
    canonical_code(&adj)
}

fn decode(code: u64, n: usize) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    adj
}

fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let mut colour: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).expect("present") as u32).collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&v| colour[v]);
    let cell_of_position: Vec<u32> = slots.iter().map(|&v| colour[v]).collect();
    let mut order = Vec::with_capacity(n);
    let mut used = 0u16;
    let mut best = u64::MAX;
    arrange(adj, &colour, &cell_of_position, &mut order, &mut used, &mut best);
    best
}

fn arrange(adj: &[u16], colour: &[u32], cells: &[u32], order: &mut Vec<usize>, used: &mut u16, best: &mut u64) {
    let p = order.len();
    if p == adj.len() {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..p {
            for j in i + 1..p {
                if adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    for v in 0..adj.len() {
        if *used >> v & 1 == 0 && colour[v] == cells[p] {
            *used |= 1 << v;
            order.push(v);
            arrange(adj, colour, cells, order, used, best);
            order.pop();
            *used &= !(1 << v);
        }
    }
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() + 2 != n {
        return Err(invalid(format!("Prüfer sequence of length {} cannot encode a tree on {n} vertices", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(invalid(format!("Prüfer entry {bad} out of range for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(&edges, Some(n))
}

/// All `n^(n-2)` labeled trees on `n` vertices (Cayley), via Prüfer codes.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n == 0 { 0 } else { (n as u64).pow(len as u32) };
    (0..total).map(move |mut code| {
        if n == 1 {
            return Graph::edgeless(1);
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_decode(&seq, n).expect("in-range code")
    })
}

/// A uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 | 1 => Graph::edgeless(n),
        _ => {
            let seq: Vec<_> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq, n).expect("in-range code")
        }
    }
}

/// A random connected graph: a random spanning tree plus each remaining
/// pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<_> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(&edges, Some(n)).expect("valid edges")
}
