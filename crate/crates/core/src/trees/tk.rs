//! Membership in the recursively defined family `T_k` and the peeling
//! computation of `beta_k` on its members.

use std::collections::{BTreeSet, HashMap};

use super::{leaf_groups, require_tree};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::truncation::{is_truncated_resolving, truncated_distance};

pub const DEFAULT_TK_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TkCondition {
    Connected,
    NoDegreeTwo,
    UniqueOrFar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TkOutcome {
    Member,
    /// Fails `condition` on the residual tree with the given vertex set
    /// (original ids), `depth` peels below the input.
    NotMember { condition: TkCondition, depth: usize, residual: Vec<usize>, detail: String },
    /// The resolving-set enumeration exceeded the budget.
    Undecided { budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TkVerdict {
    pub outcome: TkOutcome,
    /// Some tree along the way had minimal resolving sets leading to
    /// different residual trees.
    pub divergent_residuals: bool,
    pub candidates_checked: u64,
}

impl TkVerdict {
    pub fn is_member(&self) -> bool {
        self.outcome == TkOutcome::Member
    }
}

/// One peel: the current tree (original ids), its chosen minimal resolving
/// set, and the vertices that set distinguishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TkStep {
    pub vertices: Vec<usize>,
    pub landmarks: Vec<usize>,
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TkSolution {
    pub size: usize,
    pub set: Vec<usize>,
    pub steps: Vec<TkStep>,
    /// Vertices left when peeling stopped.
    pub residual: Vec<usize>,
}

pub fn tk_membership(t: &Graph, k: u32) -> Result<TkVerdict> {
    tk_membership_with_budget(t, k, DEFAULT_TK_BUDGET)
}

pub fn tk_membership_with_budget(t: &Graph, k: u32, budget: u64) -> Result<TkVerdict> {
    if t.n() > 0 {
        require_tree(t)?;
    }
    let mut state = Membership { t, k, budget, checked: 0, divergent: false, decided: HashMap::new() };
    let all: Vec<usize> = (0..t.n()).collect();
    let outcome = state.check(&all, 0)?;
    Ok(TkVerdict { outcome, divergent_residuals: state.divergent, candidates_checked: state.checked })
}

struct Membership<'a> {
    t: &'a Graph,
    k: u32,
    budget: u64,
    checked: u64,
    divergent: bool,
    decided: HashMap<Vec<usize>, TkOutcome>,
}

impl Membership<'_> {
    fn check(&mut self, vertices: &[usize], depth: usize) -> Result<TkOutcome> {
        if let Some(known) = self.decided.get(vertices) {
            return Ok(known.clone());
        }
        let outcome = self.check_uncached(vertices, depth)?;
        self.decided.insert(vertices.to_vec(), outcome.clone());
        Ok(outcome)
    }

    fn check_uncached(&mut self, vertices: &[usize], depth: usize) -> Result<TkOutcome> {
        if vertices.is_empty() {
            return Ok(TkOutcome::Member);
        }
        let fail = |condition, detail: String| TkOutcome::NotMember {
            condition,
            depth,
            residual: vertices.to_vec(),
            detail,
        };
        let h = self.t.induced(vertices);
        if !h.is_connected() {
            return Ok(fail(TkCondition::Connected, "residual forest is disconnected".into()));
        }
        if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 2) {
            return Ok(fail(TkCondition::NoDegreeTwo, format!("vertex {} has degree two", vertices[v])));
        }
        let sets = MinimalSets::new(&h)?;
        if self.checked.saturating_add(sets.count()) > self.budget {
            return Ok(TkOutcome::Undecided { budget: self.budget });
        }
        let d = h.distance_matrix()?;
        let mut residuals = BTreeSet::new();
        for set in sets.iter() {
            self.checked += 1;
            match split(&d, &set, self.k) {
                Ok(rest) => {
                    residuals.insert(rest.iter().map(|&v| vertices[v]).collect::<Vec<_>>());
                }
                Err((a, b)) => {
                    let landmarks: Vec<usize> = set.iter().map(|&v| vertices[v]).collect();
                    return Ok(fail(
                        TkCondition::UniqueOrFar,
                        format!(
                            "vertices {} and {} share a vector that is not all-far under landmarks {landmarks:?}",
                            vertices[a], vertices[b]
                        ),
                    ));
                }
            }
        }
        if residuals.len() > 1 {
            self.divergent = true;
        }
        for rest in residuals {
            let outcome = self.check(&rest, depth + 1)?;
            if outcome != TkOutcome::Member {
                return Ok(outcome);
            }
        }
        Ok(TkOutcome::Member)
    }
}

/// The minimal (classic) resolving sets of a tree without degree-two
/// vertices: all but one leaf of every exterior major vertex's group.
struct MinimalSets {
    fixed: Vec<Vec<usize>>,
    n: usize,
}

impl MinimalSets {
    fn new(h: &Graph) -> Result<Self> {
        let fixed = match h.n() {
            1 => vec![],
            2 => vec![vec![0, 1]],
            _ => leaf_groups(h)?.into_values().collect(),
        };
        Ok(MinimalSets { fixed, n: h.n() })
    }

    fn count(&self) -> u64 {
        if self.n == 2 {
            return 2;
        }
        self.fixed.iter().fold(1u64, |acc, g| acc.saturating_mul(g.len() as u64))
    }

    /// Sets in lexicographic order of excluded-leaf indices, so the first
    /// one drops the lowest-id leaf of every group.
    fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let groups = &self.fixed;
        let total = self.count();
        let two = self.n == 2;
        (0..total).map(move |mut idx| {
            if two {
                return vec![idx as usize];
            }
            let mut excluded = vec![0usize; groups.len()];
            for (slot, g) in excluded.iter_mut().zip(groups).rev() {
                *slot = (idx % g.len() as u64) as usize;
                idx /= g.len() as u64;
            }
            let mut set: Vec<usize> = groups
                .iter()
                .zip(&excluded)
                .flat_map(|(g, &x)| g.iter().enumerate().filter(move |&(i, _)| i != x).map(|(_, &v)| v))
                .collect();
            set.sort_unstable();
            set
        })
    }

    fn first(&self) -> Vec<usize> {
        self.iter().next().unwrap_or_default()
    }
}

/// Vertices whose truncated vectors are shared; every such vector must be
/// all-far, otherwise the offending pair is returned.
fn split(d: &DistanceMatrix, set: &[usize], k: u32) -> std::result::Result<Vec<usize>, (usize, usize)> {
    let far = truncated_distance(u32::MAX, k);
    let mut by_vector: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    for v in 0..d.n() {
        let vec: Vec<u32> = set.iter().map(|&r| truncated_distance(d.get(v, r), k)).collect();
        by_vector.entry(vec).or_default().push(v);
    }
    let mut rest = Vec::new();
    for (vec, class) in by_vector {
        if class.len() > 1 {
            if vec.iter().any(|&x| x != far) {
                return Err((class[0], class[1]));
            }
            rest.extend(class);
        }
    }
    rest.sort_unstable();
    Ok(rest)
}

/// `beta_k` of a `T_k` member by peeling with the lowest-id-excluded
/// minimal resolving set at every step.
pub fn tk_beta_k(t: &Graph, k: u32) -> Result<TkSolution> {
    require_tree(t)?;
    let verdict = tk_membership(t, k)?;
    match &verdict.outcome {
        TkOutcome::Member => {}
        TkOutcome::NotMember { condition, depth, detail, .. } => {
            return Err(Error::NotTkMember(format!("{condition:?} fails at depth {depth}: {detail}")));
        }
        TkOutcome::Undecided { budget } => {
            return Err(Error::NotTkMember(format!("undecided within a budget of {budget} candidate sets")));
        }
    }
    if t.n() <= 1 {
        return Ok(TkSolution { size: t.n(), set: (0..t.n()).collect(), steps: vec![], residual: vec![] });
    }
    let mut steps = Vec::new();
    let mut vertices: Vec<usize> = (0..t.n()).collect();
    while vertices.len() > 1 {
        let h = t.induced(&vertices);
        let local = MinimalSets::new(&h)?.first();
        let rest = split(&h.distance_matrix()?, &local, k)
            .map_err(|(a, b)| Error::Internal(format!("member failed to split {a} and {b}")))?;
        let rest: Vec<usize> = rest.iter().map(|&v| vertices[v]).collect();
        let removed = vertices.iter().copied().filter(|v| rest.binary_search(v).is_err()).collect();
        steps.push(TkStep { vertices: vertices.clone(), landmarks: local.iter().map(|&v| vertices[v]).collect(), removed });
        vertices = rest;
    }
    let mut set: Vec<usize> = steps.iter().flat_map(|s| s.landmarks.iter().copied()).collect();
    set.sort_unstable();
    let cert = is_truncated_resolving(&t.distance_matrix()?, &set, k)?;
    if !cert.resolving {
        return Err(Error::Internal(format!("peeled set {set:?} does not resolve: {:?}", cert.witness_pair)));
    }
    Ok(TkSolution { size: set.len(), set, steps, residual: vertices })
}
