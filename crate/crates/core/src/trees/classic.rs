use std::collections::BTreeMap;

use super::require_tree;
use crate::error::Result;
use crate::graph::Graph;

/// Maps each exterior major vertex to the leaves whose path to it runs
/// only through degree-2 vertices.
pub fn leaf_groups(t: &Graph) -> Result<BTreeMap<usize, Vec<usize>>> {
    require_tree(t)?;
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for leaf in t.leaves() {
        let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
        while t.degree(cur) == 2 {
            let next = t.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
            (prev, cur) = (cur, next);
        }
        if t.degree(cur) >= 3 {
            groups.entry(cur).or_default().push(leaf);
        }
    }
    Ok(groups)
}

pub fn exterior_major_vertices(t: &Graph) -> Result<Vec<usize>> {
    Ok(leaf_groups(t)?.into_keys().collect())
}

/// Classic metric dimension of a tree: leaves minus exterior major
/// vertices, or 1 for a path.
pub fn tree_metric_dimension(t: &Graph) -> Result<usize> {
    Ok(tree_resolving_set(t)?.len())
}

/// Every leaf group minus its lowest-id leaf; one endpoint for a path.
pub fn tree_resolving_set(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    if t.is_path() {
        return Ok(vec![t.leaves().first().copied().unwrap_or(0)]);
    }
    let mut set: Vec<usize> = leaf_groups(t)?.into_values().flat_map(|g| g.into_iter().skip(1)).collect();
    set.sort_unstable();
    Ok(set)
}
