//! Undirected simple graphs over contiguous vertex ids and their hop distances.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric; there are no self-loops and no
/// parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed; `n` defaults to the largest id plus one.
    pub fn from_edge_list(edges: &[(usize, usize)], n: Option<usize>) -> Result<Graph> {
        let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let n = match n {
            Some(n) => {
                if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
                    return Err(Error::VertexOutOfRange { id: u.max(v), n });
                }
                n
            }
            None => inferred,
        };
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { id: v, n: self.n() })
        }
    }

    /// Hop distances from `source`; `None` marks vertices in other components.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 => false,
            _ => self.bfs_distances(0).map(|d| d.iter().all(Option::is_some)).unwrap_or(false),
        }
    }

    /// All-pairs hop distances. Fails on empty or disconnected graphs.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            for d in self.bfs_distances(s)? {
                dist.push(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.distance_matrix()?.diameter())
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Degree-one vertices, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// Subgraph induced by `keep` (ids are renumbered in the order given).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Dense all-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Free-function form of [`Graph::distance_matrix`].
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    g.distance_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    #[test]
    fn edge_list_normalization() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2)], None).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_path());

        let g = Graph::from_edge_list(&[(0, 1), (1, 0)], None).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);

        assert_eq!(Graph::from_edge_list(&[(0, 0)], None), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(&[(0, 3)], Some(3)),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn bfs() {
        let d = path(4).bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(3)]);
        let d = complete(4).bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(1), Some(1)]);

        let g = Graph::from_edge_list(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(g.bfs_distances(0).unwrap(), vec![Some(0), Some(1), None, None]);
        assert!(g.bfs_distances(4).is_err());
    }

    #[test]
    fn all_pairs() {
        let d = cycle(4).distance_matrix().unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 1), 1);
        let d = complete(5).distance_matrix().unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        assert_eq!(path(5).distance_matrix().unwrap().get(0, 4), 4);

        let split = Graph::from_edge_list(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(split.distance_matrix(), Err(Error::Disconnected));
        assert_eq!(Graph::edgeless(0).distance_matrix(), Err(Error::Empty));
    }

    #[test]
    fn diameters() {
        assert_eq!(path(6).diameter().unwrap(), 5);
        assert_eq!(complete(5).diameter().unwrap(), 1);
        assert_eq!(cycle(7).diameter().unwrap(), 3);
        for n in 3..=50 {
            assert_eq!(path(n).diameter().unwrap() as usize, n - 1);
            assert_eq!(cycle(n).diameter().unwrap() as usize, n / 2);
        }
    }

    #[test]
    fn tree_predicates() {
        let star = Graph::from_edge_list(&[(0, 1), (0, 2), (0, 3), (0, 4)], None).unwrap();
        assert!(star.is_tree());
        assert!(!star.is_path());
        assert_eq!(star.leaves().len(), 4);
        assert!(!cycle(4).is_tree());
        assert!(path(2).is_path());
        assert_eq!(path(2).leaves(), vec![0, 1]);
    }

    #[test]
    fn complement_and_induced() {
        let g = cycle(4).complement();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let h = cycle(5).induced(&[0, 1, 2]);
        assert!(h.is_path());
        assert!(complete(4).is_complete());
        assert!(!cycle(4).is_complete());
    }
}
