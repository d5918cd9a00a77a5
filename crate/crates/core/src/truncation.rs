//! The truncated metric `d_k(u, v) = min(d(u, v), k + 1)`, resolving-set
//! verification, exact minimum search, and a greedy partition-entropy
//! heuristic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Truncates a hop distance at `k + 1`.
#[inline]
pub fn truncated_distance(d: u32, k: u32) -> u32 {
    d.min(k.saturating_add(1))
}

/// `d_k(v | R)`: truncated distances from one vertex to an ordered landmark list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncatedVector(pub Vec<u32>);

impl TruncatedVector {
    /// True when every coordinate equals `k + 1`.
    pub fn is_far(&self, k: u32) -> bool {
        self.0.iter().all(|&x| x == truncated_distance(u32::MAX, k))
    }
}

pub fn truncated_vector(
    d: &DistanceMatrix,
    v: usize,
    landmarks: &[usize],
    k: u32,
) -> Result<TruncatedVector> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let n = d.n();
    if let Some(&bad) = landmarks.iter().chain([&v]).find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { id: bad, n });
    }
    let row = d.row(v);
    Ok(TruncatedVector(landmarks.iter().map(|&r| truncated_distance(row[r], k)).collect()))
}

/// Outcome of checking one landmark set at one truncation level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvingCertificate {
    pub set: Vec<usize>,
    pub k: u32,
    pub resolving: bool,
    /// Two distinct vertices with identical vectors, present iff not resolving.
    pub witness_pair: Option<(usize, usize)>,
}

/// Checks whether `set` is a `k`-truncated resolving set. On failure the
/// certificate carries the first collision `(u, v)` found scanning `v`
/// upward.
pub fn is_truncated_resolving(
    d: &DistanceMatrix,
    set: &[usize],
    k: u32,
) -> Result<ResolvingCertificate> {
    if set.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let n = d.n();
    if let Some(&bad) = set.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { id: bad, n });
    }
    let witness_pair = match RadixKey::new(k, set.len()) {
        Some(radix) => first_collision(n, |v| radix.key(d.row(v), set, k)),
        None => first_collision(n, |v| {
            let row = d.row(v);
            set.iter().map(|&r| truncated_distance(row[r], k)).collect::<Vec<_>>()
        }),
    };
    Ok(ResolvingCertificate { set: set.to_vec(), k, resolving: witness_pair.is_none(), witness_pair })
}

fn first_collision<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Option<(usize, usize)> {
    let mut seen = HashMap::with_capacity(n);
    for v in 0..n {
        if let Some(&u) = seen.get(&key(v)) {
            return Some((u, v));
        }
        seen.insert(key(v), v);
    }
    None
}

/// Packs a truncated vector into one base-(k+2) integer when it fits.
struct RadixKey {
    base: u128,
}

impl RadixKey {
    fn new(k: u32, len: usize) -> Option<Self> {
        let base = u128::from(k) + 2;
        base.checked_pow(u32::try_from(len).ok()?)?;
        Some(RadixKey { base })
    }

    fn key(&self, row: &[u32], set: &[usize], k: u32) -> u128 {
        set.iter()
            .fold(0, |acc, &r| acc * self.base + u128::from(truncated_distance(row[r], k)))
    }
}

/// A minimum resolving set together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimumResolvingSet {
    pub size: usize,
    pub set: Vec<usize>,
}

/// For every candidate landmark, the set of unordered vertex pairs it
/// separates, stored as a bitset over pair indices.
struct PairMasks {
    words: usize,
    masks: Vec<u64>,
    full: Vec<u64>,
}

impl PairMasks {
    fn build(items: usize, candidates: usize, separates: impl Fn(usize, usize, usize) -> bool) -> Self {
        let pairs = items * items.saturating_sub(1) / 2;
        let words = pairs.div_ceil(64).max(1);
        let mut masks = vec![0u64; candidates * words];
        let mut full = vec![0u64; words];
        let mut idx = 0;
        for u in 0..items {
            for v in u + 1..items {
                let (w, bit) = (idx / 64, 1u64 << (idx % 64));
                full[w] |= bit;
                for c in 0..candidates {
                    if separates(u, v, c) {
                        masks[c * words + w] |= bit;
                    }
                }
                idx += 1;
            }
        }
        PairMasks { words, masks, full }
    }

    fn mask(&self, c: usize) -> &[u64] {
        &self.masks[c * self.words..(c + 1) * self.words]
    }

    fn candidates(&self) -> usize {
        self.masks.len() / self.words
    }

    fn covers(&self, acc: &[u64]) -> bool {
        acc.iter().zip(&self.full).all(|(a, f)| a & f == *f)
    }

    /// Lexicographically first `size`-subset of candidates covering all pairs.
    fn first_cover(&self, size: usize) -> Option<Vec<usize>> {
        let m = self.candidates();
        if size == 0 || size > m {
            return None;
        }
        let mut acc = vec![0u64; (size + 1) * self.words];
        let mut chosen = Vec::with_capacity(size);
        self.descend(0, size, &mut acc, &mut chosen).then_some(chosen)
    }

    fn descend(&self, start: usize, size: usize, acc: &mut [u64], chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        let w = self.words;
        for c in start..=self.candidates() - (size - depth) {
            let (done, rest) = acc.split_at_mut((depth + 1) * w);
            let prev = &done[depth * w..];
            let next = &mut rest[..w];
            for ((n, p), m) in next.iter_mut().zip(prev).zip(self.mask(c)) {
                *n = p | m;
            }
            chosen.push(c);
            if depth + 1 == size {
                if self.covers(next) {
                    return true;
                }
            } else if self.descend(c + 1, size, acc, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Exact `beta_k` by exhaustive search over subsets in increasing size,
/// each size scanned in lexicographic order. The returned set is the
/// lexicographically first minimum resolving set.
pub fn beta_k_exact(d: &DistanceMatrix, k: u32) -> MinimumResolvingSet {
    let n = d.n();
    if n <= 1 {
        return MinimumResolvingSet { size: n, set: (0..n).collect() };
    }
    // Truncation beyond the diameter changes nothing.
    let k = k.min(d.diameter());
    let masks = PairMasks::build(n, n, |u, v, r| {
        truncated_distance(d.get(u, r), k) != truncated_distance(d.get(v, r), k)
    });
    for size in 1..=n {
        if let Some(set) = masks.first_cover(size) {
            return MinimumResolvingSet { size, set };
        }
    }
    unreachable!("the full vertex set always resolves")
}

/// `beta_0(G) = n - 1`: at `k = 0` the distance matrix is `1 - I`.
pub fn beta_0(d: &DistanceMatrix) -> Result<usize> {
    match d.n() {
        0 | 1 => Err(Error::InvalidParameter("beta_0 needs at least two vertices".into())),
        n => Ok(n - 1),
    }
}

/// A finite real matrix whose rows are the items to separate and whose
/// columns are candidate landmarks.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl GeneralMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("need at least one row and one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidMatrix("entries must be finite".into()));
        }
        Ok(GeneralMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn from_distances(d: &DistanceMatrix) -> Self {
        let n = d.n();
        let entries = (0..n).flat_map(|u| d.row(u).iter().map(|&x| f64::from(x))).collect();
        GeneralMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.entries[r * self.cols + c]
    }

    /// `min(M(a, b), k + 1)`.
    pub fn truncated(&self, r: usize, c: usize, k: u32) -> f64 {
        self.get(r, c).min(f64::from(k) + 1.0)
    }
}

/// `beta_k` of a matrix: infinite when some pair of rows cannot be told
/// apart by any column after truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixDimension {
    Finite { size: usize, columns: Vec<usize> },
    Infinite,
}

pub fn beta_k_matrix(m: &GeneralMatrix, k: u32) -> MatrixDimension {
    let masks = PairMasks::build(m.rows, m.cols, |u, v, c| m.truncated(u, c, k) != m.truncated(v, c, k));
    if m.rows == 1 {
        return MatrixDimension::Finite { size: 1, columns: vec![0] };
    }
    let mut union = vec![0u64; masks.words];
    for c in 0..m.cols {
        for (a, b) in union.iter_mut().zip(masks.mask(c)) {
            *a |= b;
        }
    }
    if !masks.covers(&union) {
        return MatrixDimension::Infinite;
    }
    (1..=m.cols)
        .find_map(|size| masks.first_cover(size))
        .map(|columns| MatrixDimension::Finite { size: columns.len(), columns })
        .expect("the union of all columns covers every pair")
}

/// Greedy landmark selection by partition entropy.
///
/// Starting from the trivial partition, repeatedly add the vertex whose
/// truncated-distance column yields the refined partition of maximum
/// entropy (ties go to the lowest id) until every class is a singleton.
/// Returns the chosen landmarks in ascending order.
pub fn ich_heuristic(d: &DistanceMatrix, k: u32) -> Result<Vec<usize>> {
    let n = d.n();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut class = vec![0usize; n];
    let mut classes = 1;
    let mut current = 0.0;
    let mut chosen = Vec::new();
    let mut picked = vec![false; n];
    while classes < n || chosen.is_empty() {
        let mut best: Option<(f64, usize, Vec<usize>, usize)> = None;
        for r in (0..n).filter(|&r| !picked[r]) {
            let (refined, count) = refine(&class, |v| truncated_distance(d.get(v, r), k));
            let h = partition_entropy(&refined, count);
            if best.as_ref().is_none_or(|(bh, ..)| h > bh + 1e-12) {
                best = Some((h, r, refined, count));
            }
        }
        let Some((h, r, refined, count)) = best else { break };
        if h <= current + 1e-12 && !chosen.is_empty() {
            break;
        }
        picked[r] = true;
        chosen.push(r);
        class = refined;
        classes = count;
        current = h;
    }
    if classes < n {
        return Err(Error::HeuristicStalled { classes, n });
    }
    chosen.sort_unstable();
    let cert = is_truncated_resolving(d, &chosen, k)?;
    if !cert.resolving {
        return Err(Error::Internal(format!("heuristic output {chosen:?} does not resolve")));
    }
    Ok(chosen)
}

/// Splits every class by the value `label(v)`; returns new class ids and count.
fn refine(class: &[usize], label: impl Fn(usize) -> u32) -> (Vec<usize>, usize) {
    let mut ids = HashMap::new();
    let refined = (0..class.len())
        .map(|v| {
            let next = ids.len();
            *ids.entry((class[v], label(v))).or_insert(next)
        })
        .collect();
    (refined, ids.len())
}

fn partition_entropy(class: &[usize], count: usize) -> f64 {
    let n = class.len() as f64;
    let mut sizes = vec![0usize; count];
    for &c in class {
        sizes[c] += 1;
    }
    sizes
        .into_iter()
        .map(|s| {
            let p = s as f64 / n;
            -p * p.ln()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path, star};

    fn dm(g: &crate::Result<crate::Graph>) -> DistanceMatrix {
        g.as_ref().unwrap().distance_matrix().unwrap()
    }

    #[test]
    fn truncation_values() {
        assert_eq!(truncated_distance(5, 2), 3);
        assert_eq!(truncated_distance(0, 3), 0);
        assert_eq!(truncated_distance(2, 4), 2);
        assert_eq!(truncated_distance(u32::MAX, u32::MAX), u32::MAX);
    }

    #[test]
    fn vectors() {
        let d = dm(&path(4));
        assert_eq!(truncated_vector(&d, 0, &[1, 3], 1).unwrap(), TruncatedVector(vec![1, 2]));
        let d9 = dm(&path(9));
        assert_eq!(truncated_vector(&d9, 5, &[0], 1).unwrap(), TruncatedVector(vec![2]));
        for v in 0..9 {
            let vec = truncated_vector(&d9, v, &[v, 2, 7], 2).unwrap();
            assert_eq!(vec.0.iter().filter(|&&x| x == 0).count(), 1 + usize::from(v == 2 || v == 7));
        }
        assert_eq!(truncated_vector(&d, 0, &[], 1), Err(Error::EmptyLandmarks));
    }

    #[test]
    fn certificates() {
        let d = dm(&path(4));
        assert!(is_truncated_resolving(&d, &[0], 3).unwrap().resolving);
        let c = is_truncated_resolving(&d, &[0], 1).unwrap();
        assert!(!c.resolving);
        assert_eq!(c.witness_pair, Some((2, 3)));
        let d5 = dm(&path(5));
        assert!(is_truncated_resolving(&d5, &[1, 3], 1).unwrap().resolving);
        assert_eq!(is_truncated_resolving(&d5, &[], 1), Err(Error::EmptyLandmarks));
    }

    #[test]
    fn wide_sets_use_the_vector_fallback() {
        // 7^50 overflows u128, so both checks take the Vec-key path.
        let d = dm(&path(60));
        assert!(RadixKey::new(5, 30).is_some());
        assert!(RadixKey::new(5, 50).is_none());
        let first: Vec<_> = (0..50).collect();
        let c = is_truncated_resolving(&d, &first, 5).unwrap();
        assert_eq!(c.witness_pair, Some((55, 56)));
        let all: Vec<_> = (0..60).collect();
        assert!(is_truncated_resolving(&d, &all, 5).unwrap().resolving);
    }

    #[test]
    fn exact_values() {
        assert_eq!(beta_k_exact(&dm(&cycle(6)), 1).size, 2);
        assert_eq!(beta_k_exact(&dm(&path(9)), 1).size, 4);
        for k in 1..4 {
            assert_eq!(beta_k_exact(&dm(&complete(5)), k).size, 4);
        }
        assert_eq!(beta_k_exact(&dm(&star(6)), 1).size, 4);
        assert_eq!(beta_k_exact(&dm(&path(1)), 3), MinimumResolvingSet { size: 1, set: vec![0] });
        // Lexicographically first witness.
        assert_eq!(beta_k_exact(&dm(&path(4)), 3).set, vec![0]);
    }

    #[test]
    fn beta_zero_matches_search() {
        for n in 2..8 {
            let d = dm(&cycle(n.max(3)));
            assert_eq!(beta_0(&d).unwrap(), beta_k_exact(&d, 0).size);
        }
        assert_eq!(beta_0(&dm(&path(2))).unwrap(), 1);
        assert_eq!(beta_0(&dm(&cycle(6))).unwrap(), 5);
        assert_eq!(beta_0(&dm(&complete(5))).unwrap(), 4);
        assert!(beta_0(&dm(&path(1))).is_err());
    }

    #[test]
    fn matrix_dimension() {
        let p3 = GeneralMatrix::from_distances(&dm(&path(3)));
        assert_eq!(beta_k_matrix(&p3, 1), MatrixDimension::Finite { size: 1, columns: vec![0] });

        let eq = GeneralMatrix::from_rows(&[vec![1.0, 7.0], vec![1.0, 7.0], vec![0.0, 2.0]]).unwrap();
        assert_eq!(beta_k_matrix(&eq, 10), MatrixDimension::Infinite);
        let same = GeneralMatrix::from_rows(&[vec![3.0, 4.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(beta_k_matrix(&same, 10), MatrixDimension::Infinite);
        // Rows that differ only above the threshold collapse after truncation.
        let far = GeneralMatrix::from_rows(&[vec![5.0], vec![9.0]]).unwrap();
        assert_eq!(beta_k_matrix(&far, 2), MatrixDimension::Infinite);
        assert!(matches!(beta_k_matrix(&far, 5), MatrixDimension::Finite { size: 1, .. }));

        let ones_minus_id = GeneralMatrix::from_rows(&[
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(beta_k_matrix(&ones_minus_id, 2), MatrixDimension::Finite { size: 2, columns: vec![0, 1] });

        assert!(GeneralMatrix::new(1, 0, vec![]).is_err());
        assert!(GeneralMatrix::new(1, 1, vec![f64::NAN]).is_err());
    }

    #[test]
    fn heuristic_examples() {
        let k4 = dm(&complete(4));
        assert_eq!(ich_heuristic(&k4, 1).unwrap().len(), 3);
        let p5 = dm(&path(5));
        let set = ich_heuristic(&p5, 1).unwrap();
        assert!(set.len() >= beta_k_exact(&p5, 1).size);
        assert!(is_truncated_resolving(&p5, &set, 1).unwrap().resolving);
        assert_eq!(ich_heuristic(&dm(&path(3)), 2).unwrap().len(), 1);
    }
}
