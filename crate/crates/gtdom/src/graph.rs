//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as sorted neighbor lists, which keeps very large sparse
//! inputs (e.g. trees with 10^5 vertices) cheap; set-valued queries return
//! [`VertexSet`] bitsets so that the combinatorial algorithms can work
//! word-parallel. Graphs are immutable after construction and all queries are
//! pure, so values can be shared freely across threads.

use std::fmt;

use thiserror::Error;

/// Errors raised while constructing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
}

/// A set of vertices over a fixed universe `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from an iterator of vertex ids (all must be `< universe`).
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, verts: I) -> Self {
        let mut s = Self::new(universe);
        for v in verts {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of vertices in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} out of range {}", self.universe);
        self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    /// Inserts `v`; returns true if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} out of range {}", self.universe);
        let word = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} out of range {}", self.universe);
        let word = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let v = i * 64 + rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(v)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.subtract(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Kind of a twin pair: true twins share closed neighborhoods, false twins
/// share open neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinKind {
    True,
    False,
}

/// An immutable simple undirected graph. No self-loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops, and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Internal constructor; `adj` must already be symmetric, sorted,
    /// loop-free and duplicate-free.
    pub(crate) fn from_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list of `v` (the cheap accessor used in hot loops).
    pub fn neighbor_ids(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Open neighborhood `N(v)` as a bitset; never contains `v` itself.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n(), self.adj[v].iter().copied())
    }

    /// `N(U)`, the union of open neighborhoods over the set `U`.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        assert_eq!(set.universe(), self.n());
        let mut out = VertexSet::new(self.n());
        for v in set.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Smallest vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.degree(v) == 0)
    }

    /// Complement graph: `uv` is an edge iff `u != v` and `uv` is not an edge
    /// here. Quadratic; meant for desk-scale graphs.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, row) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().copied().peekable();
            for v in 0..n {
                while it.peek().is_some_and(|&x| x < v) {
                    it.next();
                }
                if v != u && it.peek() != Some(&v) {
                    row.push(v);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by `set`, with vertices renumbered `0..set.len()` in
    /// ascending order of their original ids. The returned map sends each new
    /// id to its original id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(set.universe(), self.n());
        let vertex_map = set.to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (new, &old) in vertex_map.iter().enumerate() {
            local[old] = new;
        }
        let adj = vertex_map
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter(|&&u| local[u] != usize::MAX)
                    .map(|&u| local[u])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), vertex_map)
    }

    /// Disjoint union; ids of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph::from_adjacency(adj)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let total = shift + other.n();
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(total);
        for u in 0..shift {
            let mut row = self.adj[u].clone();
            row.extend(shift..total);
            adj.push(row);
        }
        for u in 0..other.n() {
            let mut row: Vec<usize> = (0..shift).collect();
            row.extend(other.adj[u].iter().map(|&v| v + shift));
            adj.push(row);
        }
        Graph::from_adjacency(adj)
    }

    /// Connected components, ordered by their smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Every degree-1 vertex paired with its unique neighbor (its support),
    /// in ascending order of the leaf.
    pub fn leaves_and_supports(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .filter(|&v| self.degree(v) == 1)
            .map(|v| (v, self.adj[v][0]))
            .collect()
    }

    /// Some twin pair if one exists: the lexicographically smallest `(u, v)`,
    /// checking false twins before true twins within a pair.
    pub fn twin_pair(&self) -> Option<(usize, usize, TwinKind)> {
        let n = self.n();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u] == self.adj[v] {
                    return Some((u, v, TwinKind::False));
                }
                if self.is_true_twin_pair(u, v) {
                    return Some((u, v, TwinKind::True));
                }
            }
        }
        None
    }

    /// `N[u] == N[v]`; true twins are necessarily adjacent.
    pub(crate) fn is_true_twin_pair(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) || self.degree(u) != self.degree(v) {
            return false;
        }
        let strip = |list: &[usize], skip: usize| {
            list.iter().copied().filter(|&x| x != skip).collect::<Vec<_>>()
        };
        strip(&self.adj[u], v) == strip(&self.adj[v], u)
    }

    /// A proper 2-coloring (values 0/1 per vertex) if the graph is bipartite.
    pub fn is_bipartite(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
