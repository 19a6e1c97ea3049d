//! Simple undirected unweighted graphs over dense vertex ids.
//!
//! A [`Graph`] is immutable once built. Every constructor normalizes the
//! adjacency lists (sorted, deduplicated, symmetric, loop-free) so that all
//! downstream algorithms can rely on ascending neighbor order for
//! deterministic tie-breaking.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hop distance; `None` means unreachable.
pub type Dist = Option<u32>;

/// Membership set over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    mask: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { mask: vec![false; n], len: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { mask: vec![true; n], len: n }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.mask.len(), "vertex {v} outside universe {}", self.mask.len());
        if self.mask[v] {
            false
        } else {
            self.mask[v] = true;
            self.len += 1;
            true
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if self.contains(v) {
            self.mask[v] = false;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for v in other.iter() {
            self.insert(v);
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn as_mask(&self) -> &[bool] {
        &self.mask
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a simple graph; duplicate edges are merged.
    ///
    /// Self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Normalizes raw adjacency (may contain duplicates, must be loop-free
    /// and symmetric up to duplicates).
    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
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

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components(&VertexSet::empty(self.n())).len() == 1
    }

    /// True when every edge of `self` is an edge of `host` and both share
    /// the vertex range.
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n() == host.n() && self.edges().iter().all(|&(u, v)| host.has_edge(u, v))
    }

    /// Multi-source BFS distances.
    pub fn bfs_distances(&self, sources: &VertexSet) -> Result<Vec<Dist>> {
        if sources.is_empty() {
            return Err(Error::Contract("bfs_distances needs a nonempty source set".into()));
        }
        if sources.universe() != self.n() {
            return Err(Error::Contract(format!(
                "source set universe {} does not match graph order {}",
                sources.universe(),
                self.n()
            )));
        }
        Ok(self.bfs_from_iter(sources.iter(), None))
    }

    /// BFS from a single vertex.
    pub fn bfs_from(&self, v: usize) -> Vec<Dist> {
        self.bfs_from_iter(std::iter::once(v), None)
    }

    /// BFS that stops expanding beyond `limit` hops (vertices farther away
    /// stay unreachable).
    pub(crate) fn bfs_from_iter<I: IntoIterator<Item = usize>>(
        &self,
        sources: I,
        limit: Option<u32>,
    ) -> Vec<Dist> {
        let mut dist: Vec<Dist> = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are labeled");
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `D_r(v)`: vertices within `r` hops of `v`.
    pub fn disk(&self, v: usize, r: u32) -> VertexSet {
        self.disk_of_set(std::iter::once(v), r)
    }

    /// Vertices within `r` hops of any vertex in `centers`.
    pub fn disk_of_set<I: IntoIterator<Item = usize>>(&self, centers: I, r: u32) -> VertexSet {
        let dist = self.bfs_from_iter(centers, Some(r));
        VertexSet::from_iter(self.n(), dist.iter().enumerate().filter_map(|(u, d)| d.map(|_| u)))
    }

    /// Connected components of `G - removed`, each ascending, ordered by
    /// minimum vertex.
    pub fn components(&self, removed: &VertexSet) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen: Vec<bool> = (0..n).map(|v| removed.contains(v)).collect();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Size of the largest component of `G - removed` (0 if nothing is left).
    pub fn max_component_size(&self, removed: &[bool]) -> usize {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut stack = Vec::new();
        let mut best = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    /// Contracts edge `(a, b)`. The merged vertex keeps the smaller id and
    /// all larger ids shift down by one. Returns the map old id -> new id.
    pub fn contract_edge(&self, a: usize, b: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.has_edge(a, b) {
            return Err(Error::InvalidEdge(a, b));
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        let map: Vec<usize> = (0..self.n())
            .map(|v| match v.cmp(&gone) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        let edges = self
            .edges()
            .into_iter()
            .map(|(u, v)| (map[u], map[v]))
            .filter(|(u, v)| u != v);
        let g = Graph::from_edges(self.n() - 1, edges)?;
        Ok((g, map))
    }

    /// Subgraph induced by `keep`, relabeled in ascending order.
    ///
    /// Returns `(subgraph, new_to_old)`; the old-to-new direction is
    /// obtained from [`invert_map`].
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_ordered(&keep.to_vec())
    }

    /// Subgraph induced by `order`, where new id `i` is `order[i]`.
    pub fn induced_ordered(&self, order: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            old_to_new[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (old_to_new[w] != usize::MAX).then_some(old_to_new[w]))
                    .collect()
            })
            .collect();
        (Graph::from_raw_adjacency(adj), order.to_vec())
    }

    /// Spanning subgraph that keeps only the given edges (all must exist).
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v));
            }
        }
        Graph::from_edges(self.n(), edges.iter().copied())
    }

    /// True when the graph is connected and has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        self.bfs_from(v).into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Inverts a `new_to_old` vertex map into an `old_to_new` lookup over `n`.
pub fn invert_map(new_to_old: &[usize], n: usize) -> Vec<Option<usize>> {
    let mut out = vec![None; n];
    for (new, &old) in new_to_old.iter().enumerate() {
        out[old] = Some(new);
    }
    out
}

/// Small named graphs used across tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid clique")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// `rows x cols` grid, vertex `(r, c)` has id `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).expect("valid grid")
    }
}
