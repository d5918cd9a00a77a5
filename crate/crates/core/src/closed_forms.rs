//! Closed forms and structural characterizations of `beta_k`.

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

fn block(k: u32) -> usize {
    3 * k as usize + 2
}

/// `beta_k(P_n)` for `n, k >= 1`, with `m = ⌊n / (3k+2)⌋`:
/// `1` if `n = 1`; `2m` for residues `{0, 1}`; `2m+1` for `{2..=k+2}`;
/// `2m+2` for `{k+3..=3k+1}`.
pub fn beta_k_path(n: usize, k: u32) -> Result<usize> {
    if n == 0 {
        return Err(invalid("beta_k(P_n) needs n >= 1"));
    }
    if k == 0 {
        return Err(invalid("beta_k(P_n) needs k >= 1; use beta_0 for k = 0"));
    }
    if n == 1 {
        return Ok(1);
    }
    let b = block(k);
    let (m, q) = (n / b, n % b);
    let ku = k as usize;
    Ok(match q {
        0 | 1 => 2 * m,
        q if q <= ku + 2 => 2 * m + 1,
        _ => 2 * m + 2,
    })
}

/// The minimum `k`-truncated resolving set of `P_n` built block by block,
/// as 1-indexed positions `v_1..v_n` in ascending order.
///
/// Within each full block of `3k+2` vertices the positions `≡ k+1` and
/// `≡ 2(k+1)` are taken; the trailing partial block adds `v_n` (residues
/// `2..=k+2`) or `v_{(3k+2)m+k+1}` and `v_{min(n, (3k+2)m+2(k+1))}`
/// (residues `k+3..=3k+1`).
pub fn path_resolving_positions(n: usize, k: u32) -> Result<Vec<usize>> {
    beta_k_path(n, k)?;
    if n == 1 {
        return Ok(vec![1]);
    }
    let b = block(k);
    let ku = k as usize;
    let (m, q) = (n / b, n % b);
    let mut set: Vec<usize> = (1..=b * m)
        .filter(|i| {
            let r = i % b;
            r == ku + 1 || r == 2 * (ku + 1)
        })
        .collect();
    match q {
        0 | 1 => {}
        q if q <= ku + 2 => set.push(n),
        _ => {
            set.push(b * m + ku + 1);
            set.push(n.min(b * m + 2 * (ku + 1)));
        }
    }
    set.dedup();
    Ok(set)
}

/// [`path_resolving_positions`] as 0-based vertex ids of [`crate::constructions::path`].
pub fn path_resolving_set(n: usize, k: u32) -> Result<Vec<usize>> {
    Ok(path_resolving_positions(n, k)?.into_iter().map(|i| i - 1).collect())
}

/// `beta_k(C_n)`: 2 when `n <= 3k+3`, otherwise `beta_k(P_n)`.
pub fn beta_k_cycle(n: usize, k: u32) -> Result<usize> {
    if n < 3 {
        return Err(invalid("beta_k(C_n) needs n >= 3"));
    }
    if k == 0 {
        return Err(invalid("beta_k(C_n) needs k >= 1; use beta_0 for k = 0"));
    }
    if n <= 3 * k as usize + 3 {
        Ok(2)
    } else {
        beta_k_path(n, k)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::Empty)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// `beta_k(G) = 1` exactly for paths on at most `k + 2` vertices.
pub fn has_beta_k_one(g: &Graph, k: u32) -> Result<bool> {
    require_connected(g)?;
    Ok(g.is_path() && g.n() <= k as usize + 2)
}

/// For `k >= 1` and `n >= 2`, `beta_k(G) = n - 1` exactly for complete graphs.
pub fn has_beta_k_n_minus_1(g: &Graph, k: u32) -> Result<bool> {
    require_connected(g)?;
    if k == 0 {
        return Err(invalid("the n-1 characterization needs k >= 1 (beta_0 = n-1 always)"));
    }
    if g.n() < 2 {
        return Err(invalid("the n-1 characterization needs n >= 2"));
    }
    Ok(g.is_complete())
}

/// Families with `beta_k = n - 2` (for `n >= 4`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NMinus2Family {
    /// `K_{s,t}`, `s <= t`.
    CompleteBipartite { s: usize, t: usize },
    /// `K_s + complement(K_t)`.
    CompleteSplit { s: usize, t: usize },
    /// `K_s + (K_1 ∪ K_t)`.
    CliqueJoinIsolatedClique { s: usize, t: usize },
    /// `P_4`, only at `k = 1`.
    P4,
}

/// Recognizes the `beta_k = n - 2` families structurally (no isomorphism
/// search). Returns `None` when `g` belongs to none of them.
pub fn has_beta_k_n_minus_2(g: &Graph, k: u32) -> Result<Option<NMinus2Family>> {
    require_connected(g)?;
    if k == 0 {
        return Err(invalid("the n-2 characterization needs k >= 1"));
    }
    if g.n() < 4 {
        return Err(invalid("the n-2 characterization applies to n >= 4"));
    }
    if let Some(f) = complete_bipartite_parts(g) {
        return Ok(Some(f));
    }
    if let Some(f) = universal_join_family(g) {
        return Ok(Some(f));
    }
    if k == 1 && g.n() == 4 && g.is_path() {
        return Ok(Some(NMinus2Family::P4));
    }
    Ok(None)
}

fn complete_bipartite_parts(g: &Graph) -> Option<NMinus2Family> {
    let n = g.n();
    // Side of vertex 0: itself plus its non-neighbors.
    let side: Vec<bool> = (0..n).map(|v| v == 0 || !g.has_edge(0, v)).collect();
    let s = side.iter().filter(|&&x| x).count();
    let t = n - s;
    if t == 0 || g.edge_count() != s * t {
        return None;
    }
    let bipartite = g.edges().all(|(u, v)| side[u] != side[v]);
    bipartite.then_some(NMinus2Family::CompleteBipartite { s: s.min(t), t: s.max(t) })
}

fn universal_join_family(g: &Graph) -> Option<NMinus2Family> {
    let n = g.n();
    let universal: Vec<bool> = (0..n).map(|v| g.degree(v) == n - 1).collect();
    let s = universal.iter().filter(|&&x| x).count();
    if s == 0 || s == n {
        return None;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !universal[v]).collect();
    let inner = |v: usize| g.degree(v) - s;
    if rest.len() >= 2 && rest.iter().all(|&v| inner(v) == 0) {
        return Some(NMinus2Family::CompleteSplit { s, t: rest.len() });
    }
    // Non-universal vertices split into one isolated vertex plus a t-clique;
    // t = 1 is the complete split graph above.
    if rest.len() < 3 {
        return None;
    }
    let t = rest.len() - 1;
    let isolated = rest.iter().filter(|&&v| inner(v) == 0).count();
    let in_clique = rest.iter().filter(|&&v| inner(v) == t - 1).count();
    (isolated == 1 && in_clique == t).then_some(NMinus2Family::CliqueJoinIsolatedClique { s, t })
}

/// Saturating `(k+1)^β + β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderBound {
    pub value: u64,
    pub saturated: bool,
}

/// Largest order a graph with `beta_k = beta` can have: `(k+1)^β + β`.
pub fn order_upper_bound(beta: usize, k: u32) -> Result<OrderBound> {
    if beta == 0 {
        return Err(invalid("order bound needs beta_k >= 1"));
    }
    let exact = u32::try_from(beta)
        .ok()
        .and_then(|b| (u64::from(k) + 1).checked_pow(b))
        .and_then(|p| p.checked_add(beta as u64));
    Ok(match exact {
        Some(value) => OrderBound { value, saturated: false },
        None => OrderBound { value: u64::MAX, saturated: true },
    })
}

/// `beta_k(P_{δ+1}) + (n - (δ+1))`.
pub fn diameter_upper_bound(n: usize, delta: usize, k: u32) -> Result<usize> {
    if delta == 0 || delta >= n {
        return Err(invalid(format!("diameter bound needs 1 <= δ <= n-1 (got n = {n}, δ = {delta})")));
    }
    Ok(beta_k_path(delta + 1, k)? + n - (delta + 1))
}
