//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold: one machine word of neighbors per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} is not a permutation of the vertex set")]
    BadPermutation(String),
}

/// A simple undirected graph with vertices `0..n`.
///
/// Row `v` of the adjacency holds the neighbors of `v` as bits. The
/// relation is kept symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds the simple graph on `n` vertices with the given edges. Repeated
    /// pairs (in either orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric,
    /// loop-free and confined to `0..rows.len()`.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(GraphError::BadPermutation(format!(
                        "adjacency rows {v} and {u} are not symmetric"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle on `n >= 3` vertices `0 - 1 - ... - n-1 - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::path(n)?;
        if n >= 3 {
            g.insert_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    /// Star `K_{1,n-1}` centered at vertex 0.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|v| (0, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges as pairs `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Copy of the graph with one extra vertex `n` joined to every vertex in `mask`.
    pub fn with_vertex(&self, mask: u64) -> Result<Self, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        if mask & !full_mask(self.n) != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: (mask & !full_mask(self.n)).trailing_zeros() as usize,
                order: n,
            });
        }
        let mut adj = self.adj.clone();
        for v in Bits(mask) {
            adj[v] |= bit(self.n);
        }
        adj.push(mask);
        Ok(Graph { n, adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(format!("{perm:?}")));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(GraphError::BadPermutation(format!("{perm:?}")));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Graph { n: self.n, adj }
    }

    /// Vertex mask of the component containing `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// True iff the graph has at most one component. `K_0` and `K_1` are connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == full_mask(self.n)
    }

    /// Length of the shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u && parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A set of unordered vertex pairs, each stored as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        self.0.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn single_vertex_and_empty_are_connected() {
        assert!(Graph::from_edges(1, []).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
    }

    #[test]
    fn two_disjoint_edges_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn girth_values() {
        assert_eq!(Graph::path(5).unwrap().girth(), None);
        assert_eq!(Graph::cycle(6).unwrap().girth(), Some(6));
        assert_eq!(Graph::complete(5).unwrap().girth(), Some(3));
        let c5_chord = Graph::cycle(5).unwrap().with_edge(0, 2).unwrap();
        assert_eq!(c5_chord.girth(), Some(3));
    }

    #[test]
    fn relabel_preserves_size_and_rejects_non_permutations() {
        let p = Graph::path(4).unwrap();
        let q = p.relabel(&[3, 1, 0, 2]).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.has_edge(3, 1) && q.has_edge(1, 0) && q.has_edge(0, 2));
        assert!(p.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn full_order_graph() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.size(), 64 * 63 / 2);
        assert!(g.is_connected());
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
    }
}
