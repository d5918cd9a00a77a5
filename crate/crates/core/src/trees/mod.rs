//! Tree-specific algorithms: the classic leaf formula, the peelable `T_k`
//! family, and the exact `beta_1` dynamic program.

mod classic;
mod dp;
mod tk;

pub use classic::{exterior_major_vertices, leaf_groups, tree_metric_dimension, tree_resolving_set};
pub use dp::{
    beta_1_tree, beta_1_tree_value, dp_tables, dp_tables_with, locating_dominating_number, DpEntry, DpTables, Ext,
    InnerSumReading, Table,
};
pub use tk::{
    tk_beta_k, tk_membership, tk_membership_with_budget, TkCondition, TkOutcome, TkSolution, TkStep, TkVerdict,
    DEFAULT_TK_BUDGET,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree with a designated root; children lists are ascending.
#[derive(Clone, Debug)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
}

impl RootedTree {
    pub fn new(t: &Graph, root: usize) -> Result<Self> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= t.n() {
            return Err(Error::VertexOutOfRange { id: root, n: t.n() });
        }
        let n = t.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    order.push(w);
                }
            }
        }
        Ok(RootedTree { root, parent, children, order })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Children before parents.
    pub fn post_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().rev().copied()
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}
