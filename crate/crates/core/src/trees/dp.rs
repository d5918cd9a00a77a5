//! The `beta_1` tree dynamic program over locating-dominating sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use super::{require_tree, RootedTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::truncation::is_truncated_resolving;

/// A set size or the infeasible sentinel; addition saturates on infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    Finite(u32),
    Infinite,
}

impl Ext {
    pub fn finite(self) -> Option<u32> {
        match self {
            Ext::Finite(x) => Some(x),
            Ext::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Ext::Infinite
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => a.cmp(b),
            (Ext::Finite(_), Ext::Infinite) => Ordering::Less,
            (Ext::Infinite, Ext::Finite(_)) => Ordering::Greater,
            (Ext::Infinite, Ext::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Ext {
    type Output = Ext;
    fn add(self, rhs: Ext) -> Ext {
        match (self, rhs) {
            (Ext::Finite(a), Ext::Finite(b)) => a.checked_add(b).map_or(Ext::Infinite, Ext::Finite),
            _ => Ext::Infinite,
        }
    }
}

impl From<u32> for Ext {
    fn from(x: u32) -> Ext {
        Ext::Finite(x)
    }
}

impl std::iter::Sum for Ext {
    fn sum<I: Iterator<Item = Ext>>(iter: I) -> Ext {
        iter.fold(Ext::Finite(0), Add::add)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Finite(x) => write!(f, "{x}"),
            Ext::Infinite => f.write_str("inf"),
        }
    }
}

/// How the second child's branch of the two-children case sums its
/// remaining grandchildren.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InnerSumReading {
    /// Sum over the second child's own children minus the chosen one.
    #[default]
    Symmetric,
    /// Sum over the first child's children, literally as typeset.
    AsPrinted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Locating-dominating set of the subtree.
    R,
    /// Locates everything but the root, which must still be dominated.
    RPrime,
    /// Locates everything but the root.
    RDoublePrime,
    /// Locating-dominating set of the subtree that avoids the root.
    RTriplePrime,
}

/// The case that realised a table entry, with the children it involves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    Leaf,
    /// The vertex is in the set; child `u` may be dominated by it alone.
    RootIn { u: usize },
    /// Child `u` is in the set and all its children are dominated elsewhere.
    OneChild { u: usize },
    /// Children `u` and `w` are in the set; `xu`, `xw` may rely on them alone.
    TwoChildren { u: usize, w: usize, xu: usize, xw: usize },
    /// Child `u` is in the set and its child `x` may rely on it alone.
    OneChildRelaxed { u: usize, x: usize },
    /// Every child carries its own locating-dominating set.
    AllChildrenFull,
    Infeasible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DpEntry {
    pub value: Ext,
    pub choice: Choice,
}

#[derive(Clone, Debug)]
pub struct DpTables {
    tree: RootedTree,
    reading: InnerSumReading,
    r: Vec<DpEntry>,
    r1: Vec<DpEntry>,
    r2: Vec<DpEntry>,
    r3: Vec<DpEntry>,
}

impl DpTables {
    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn reading(&self) -> InnerSumReading {
        self.reading
    }

    pub fn entry(&self, table: Table, v: usize) -> DpEntry {
        match table {
            Table::R => self.r[v],
            Table::RPrime => self.r1[v],
            Table::RDoublePrime => self.r2[v],
            Table::RTriplePrime => self.r3[v],
        }
    }

    pub fn value(&self, table: Table, v: usize) -> Ext {
        self.entry(table, v).value
    }

    /// Rebuilds a set realising `table` at `v` from the stored choices.
    /// Only meaningful under the symmetric reading; `None` when infeasible.
    pub fn witness(&self, table: Table, v: usize) -> Option<Vec<usize>> {
        if self.value(table, v).is_infinite() {
            return None;
        }
        let mut out = Vec::new();
        self.collect(table, v, &mut out);
        out.sort_unstable();
        Some(out)
    }

    fn collect(&self, table: Table, v: usize, out: &mut Vec<usize>) {
        let children = self.tree.children(v);
        match self.entry(table, v).choice {
            Choice::Infeasible => unreachable!("infeasible entries are never expanded"),
            Choice::Leaf => {
                if matches!(table, Table::R | Table::RPrime) {
                    out.push(v);
                }
            }
            Choice::RootIn { u } => {
                out.push(v);
                for &c in children {
                    self.collect(if c == u { Table::RDoublePrime } else { Table::RPrime }, c, out);
                }
            }
            Choice::OneChild { u } => {
                out.push(u);
                for &y in self.tree.children(u) {
                    self.collect(Table::RPrime, y, out);
                }
                for &c in children.iter().filter(|&&c| c != u) {
                    self.collect(Table::R, c, out);
                }
            }
            Choice::TwoChildren { u, w, xu, xw } => {
                for (p, x) in [(u, xu), (w, xw)] {
                    out.push(p);
                    for &y in self.tree.children(p) {
                        self.collect(if y == x { Table::RDoublePrime } else { Table::RPrime }, y, out);
                    }
                }
                for &c in children.iter().filter(|&&c| c != u && c != w) {
                    self.collect(Table::R, c, out);
                }
            }
            Choice::OneChildRelaxed { u, x } => {
                out.push(u);
                for &y in self.tree.children(u) {
                    self.collect(if y == x { Table::RDoublePrime } else { Table::RPrime }, y, out);
                }
                for &c in children.iter().filter(|&&c| c != u) {
                    self.collect(Table::R, c, out);
                }
            }
            Choice::AllChildrenFull => {
                for &c in children {
                    self.collect(Table::R, c, out);
                }
            }
        }
    }
}

pub fn dp_tables(rt: &RootedTree) -> DpTables {
    dp_tables_with(rt, InnerSumReading::Symmetric)
}

fn better(best: &mut DpEntry, value: Ext, choice: Choice) {
    if value < best.value {
        *best = DpEntry { value, choice };
    }
}

const INFEASIBLE: DpEntry = DpEntry { value: Ext::Infinite, choice: Choice::Infeasible };

pub fn dp_tables_with(rt: &RootedTree, reading: InnerSumReading) -> DpTables {
    let n = rt.n();
    let leaf = |value: Ext| DpEntry { value, choice: Choice::Leaf };
    let (mut r, mut r1, mut r2, mut r3) =
        (vec![INFEASIBLE; n], vec![INFEASIBLE; n], vec![INFEASIBLE; n], vec![INFEASIBLE; n]);
    // Best "one grandchild relies on this vertex alone" term per vertex:
    // min over x in C(u) of R''(x) + sum of R'(y) over the rest of C(u).
    let mut relaxed: Vec<(Ext, usize)> = vec![(Ext::Infinite, usize::MAX); n];
    let mut sum_r1 = vec![Ext::Finite(0); n];

    for v in rt.post_order() {
        let cs = rt.children(v);
        if cs.is_empty() {
            r[v] = leaf(1.into());
            r1[v] = leaf(1.into());
            r2[v] = leaf(0.into());
            r3[v] = leaf(Ext::Infinite);
            continue;
        }
        let all_r1: Ext = cs.iter().map(|&c| r1[c].value).sum();
        let all_r: Ext = cs.iter().map(|&c| r[c].value).sum();
        sum_r1[v] = all_r1;
        let minus = |total: Ext, part: Ext| match (total, part) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a - b),
            _ => Ext::Infinite,
        };

        let mut best_rel = (Ext::Infinite, usize::MAX);
        for &x in cs {
            let val = r2[x].value + minus(all_r1, r1[x].value);
            if val < best_rel.0 {
                best_rel = (val, x);
            }
        }
        relaxed[v] = best_rel;

        // The vertex itself is in the set.
        let mut root_in = INFEASIBLE;
        for &u in cs {
            better(&mut root_in, Ext::Finite(1) + r2[u].value + minus(all_r1, r1[u].value), Choice::RootIn { u });
        }
        // Exactly one designated child in the set, its children dominated elsewhere.
        let mut one_child = INFEASIBLE;
        for &u in cs {
            let val = Ext::Finite(1) + sum_r1[u] + minus(all_r, r[u].value);
            better(&mut one_child, val, Choice::OneChild { u });
        }
        // Two designated children in the set.
        let mut two = INFEASIBLE;
        for (i, &u) in cs.iter().enumerate() {
            for &w in &cs[i + 1..] {
                let (ru, xu) = relaxed[u];
                let (rw, xw) = match reading {
                    InnerSumReading::Symmetric => relaxed[w],
                    InnerSumReading::AsPrinted => {
                        let mut b = (Ext::Infinite, usize::MAX);
                        for &x in rt.children(w) {
                            let val = r2[x].value + sum_r1[u];
                            if val < b.0 {
                                b = (val, x);
                            }
                        }
                        b
                    }
                };
                let rest = minus(minus(all_r, r[u].value), r[w].value);
                let val = Ext::Finite(2) + ru + rw + rest;
                better(&mut two, val, Choice::TwoChildren { u, w, xu, xw });
            }
        }
        // One designated child in the set, one of its children relying on it.
        let mut relaxed_child = INFEASIBLE;
        for &u in cs {
            let (ru, x) = relaxed[u];
            let val = Ext::Finite(1) + ru + minus(all_r, r[u].value);
            better(&mut relaxed_child, val, Choice::OneChildRelaxed { u, x });
        }

        let pick = |cands: &[DpEntry]| {
            let mut best = INFEASIBLE;
            for c in cands {
                better(&mut best, c.value, c.choice);
            }
            best
        };
        r[v] = pick(&[root_in, one_child, two]);
        r1[v] = pick(&[root_in, relaxed_child]);
        r2[v] = pick(&[root_in, DpEntry { value: all_r, choice: Choice::AllChildrenFull }]);
        r3[v] = pick(&[one_child, two]);
    }
    DpTables { tree: rt.clone(), reading, r, r1, r2, r3 }
}

/// Minimum locating-dominating set size of a tree with at least two vertices.
pub fn locating_dominating_number(t: &Graph) -> Result<usize> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(Error::InvalidParameter("locating-dominating number needs at least two vertices".into()));
    }
    let tables = dp_tables(&RootedTree::new(t, 0)?);
    let value = tables.value(Table::R, 0).finite().ok_or_else(|| Error::Internal("R(root) infinite".into()))?;
    Ok(value as usize)
}

/// Exact `beta_1` of a tree, returned with a verified witness.
pub fn beta_1_tree(t: &Graph) -> Result<(usize, Vec<usize>)> {
    require_tree(t)?;
    if t.n() <= 2 {
        return Ok((1, vec![0]));
    }
    let base = dp_tables(&RootedTree::new(t, 0)?);
    let mut best = (base.value(Table::R, 0), None::<DpTables>);
    for v in 0..t.n() {
        let tables = dp_tables(&RootedTree::new(t, v)?);
        let total: Ext = tables.tree().children(v).iter().map(|&u| tables.value(Table::RTriplePrime, u)).sum();
        if total < best.0 {
            best = (total, Some(tables));
        }
    }
    let witness = match &best.1 {
        None => base.witness(Table::R, 0).expect("finite"),
        Some(tables) => {
            let root = tables.tree().root();
            let mut set = Vec::new();
            for &u in tables.tree().children(root) {
                set.extend(tables.witness(Table::RTriplePrime, u).expect("finite"));
            }
            set.sort_unstable();
            set
        }
    };
    let size = best.0.finite().ok_or_else(|| Error::Internal("no feasible 1-truncated set".into()))? as usize;
    if witness.len() != size {
        return Err(Error::Internal(format!("witness has {} vertices, value is {size}", witness.len())));
    }
    let cert = is_truncated_resolving(&t.distance_matrix()?, &witness, 1)?;
    if !cert.resolving {
        return Err(Error::Internal(format!("witness {witness:?} does not resolve: {:?}", cert.witness_pair)));
    }
    Ok((size, witness))
}

/// The Algorithm's value alone, under either inner-sum reading.
pub fn beta_1_tree_value(t: &Graph, reading: InnerSumReading) -> Result<usize> {
    require_tree(t)?;
    if t.n() <= 2 {
        return Ok(1);
    }
    let mut best = dp_tables_with(&RootedTree::new(t, 0)?, reading).value(Table::R, 0);
    for v in 0..t.n() {
        let tables = dp_tables_with(&RootedTree::new(t, v)?, reading);
        let total: Ext = tables.tree().children(v).iter().map(|&u| tables.value(Table::RTriplePrime, u)).sum();
        best = best.min(total);
    }
    best.finite().map(|x| x as usize).ok_or_else(|| Error::Internal("no feasible 1-truncated set".into()))
}
