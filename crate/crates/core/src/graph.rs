//! Simple undirected graphs on dense vertex ids.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertex ids drawn from a fixed universe `0..universe`.
///
/// Ordering is lexicographic on the ascending member list, so `{0} < {0, 1} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(universe) }
    }

    /// Builds a set from ids, rejecting any id outside the universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = VertexSet::new(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Set of the low `universe` bits of `mask`. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        let mut set = VertexSet::new(universe);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            set.bits.insert(v);
            m &= m - 1;
        }
        set
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::new(universe);
        set.bits.insert_range(..);
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    /// Bitmask form; `None` when the universe exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.universe() > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |m, v| m | (1 << v)))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Immutable simple undirected graph with vertex ids `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted; adjacency lists are sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds the canonical graph for an edge list. Duplicate and reversed pairs
    /// collapse to a single edge.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid for n >= 3")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// K_{a,b} with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::new(a + b, &edges).expect("bipartite edges are valid")
    }

    /// The d-dimensional hypercube; vertex ids are the bit strings.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        Graph::new(n, &edges).expect("hypercube edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|a| a.len() == k)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components(&VertexSet::new(self.n)).len() == 1
    }

    /// Per-vertex neighbor bitmasks; `None` for graphs with more than 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.adj.iter().map(|a| a.iter().fold(0u64, |m, &w| m | (1 << w))).collect())
    }

    /// Connected components of `G - removed`, ordered by smallest member.
    pub fn connected_components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        for v in removed.iter().filter(|&v| v < self.n) {
            seen[v] = true;
        }
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    /// Subgraph induced by `vs`, relabelled `0..|vs|` in ascending order of the
    /// original ids. The second value maps new ids back to original ids.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> (Graph, Vec<usize>) {
        let remap: Vec<usize> = vs.iter().filter(|&v| v < self.n).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in remap.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::new(remap.len(), &edges).expect("induced edges are valid");
        (g, remap)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}
