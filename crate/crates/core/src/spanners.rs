//! Local subtrees, the sparse additive spanner, and collective tree systems.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hierarchy::{HierTree, VertexKind};
use crate::unionfind::UnionFind;

/// Largest graph [`optimal_tree_spanner_small`] accepts by default.
pub const DEFAULT_SMALL_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SubtreeSource {
    /// BFS tree of the meta-free component around a separator center.
    BfsTree,
    /// Exhaustive best additive tree spanner of a small leaf (`k = 1`).
    OptimalLeafSpanner,
    /// BFS tree around a dominating vertex of a leaf (`k > 1`).
    DominatingBfs,
}

/// A tree (or forest, for `k = 1` leaves) over original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSubtree {
    pub level: usize,
    pub node: usize,
    pub center_index: usize,
    pub root: Option<usize>,
    pub edges: Vec<(usize, usize)>,
    pub source: SubtreeSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SystemMode {
    Collective,
    SparseUnion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpannerTree {
    pub level: Option<usize>,
    pub center_index: Option<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Output of the spanner constructions. In `SparseUnion` mode `trees`
/// holds a single entry: the union subgraph (not a tree in general).
#[derive(Debug, Clone, Serialize)]
pub struct SpannerSystem {
    pub mode: SystemMode,
    pub n: usize,
    pub k: usize,
    pub r_max: u32,
    pub trees: Vec<SpannerTree>,
}

impl SpannerSystem {
    pub fn num_edges(&self) -> usize {
        self.trees.iter().map(|t| t.edges.len()).sum()
    }

    /// Each entry as a spanning subgraph of `g`.
    pub fn tree_graphs(&self, g: &Graph) -> Result<Vec<Graph>> {
        self.trees.iter().map(|t| g.edge_subgraph(&t.edges)).collect()
    }
}

/// BFS tree of `g` rooted at `root`, restricted to the root's component.
/// Every vertex hangs off its smallest-id neighbor one layer closer.
pub fn bfs_tree(g: &Graph, root: usize) -> Vec<(usize, usize)> {
    let dist = g.bfs_from(root);
    let mut edges = Vec::new();
    for u in g.vertices() {
        let Some(du) = dist[u] else { continue };
        if du == 0 {
            continue;
        }
        let parent = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&w| dist[w] == Some(du - 1))
            .expect("BFS layers are connected");
        edges.push((parent.min(u), parent.max(u)));
    }
    edges.sort_unstable();
    edges
}

fn all_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    g.vertices().map(|v| g.bfs_from(v)).collect()
}

/// Spanning tree of a small connected graph minimizing the additive surplus
/// `max_{x,y} d_T(x,y) - d_G(x,y)`, by enumerating every `(n-1)`-edge subset
/// in lexicographic order. Returns the first optimum.
pub fn optimal_tree_spanner_small(g: &Graph) -> Result<(Vec<(usize, usize)>, u32)> {
    optimal_tree_spanner_capped(g, DEFAULT_SMALL_CAP)
}

pub fn optimal_tree_spanner_capped(g: &Graph, cap: usize) -> Result<(Vec<(usize, usize)>, u32)> {
    let n = g.n();
    if n > cap {
        return Err(Error::Refused(format!("exhaustive tree spanner search is capped at {cap} vertices, got {n}")));
    }
    if n == 0 {
        return Ok((Vec::new(), 0));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    let dg = all_distances(g);
    let mut best: Option<(u32, Vec<(usize, usize)>)> = None;
    let mut pick: Vec<usize> = (0..n - 1).collect();
    if n == 1 {
        return Ok((Vec::new(), 0));
    }
    loop {
        let mut uf = UnionFind::new(n);
        if pick.iter().all(|&i| uf.union(edges[i].0, edges[i].1)) {
            let tree: Vec<(usize, usize)> = pick.iter().map(|&i| edges[i]).collect();
            let t = Graph::from_edges(n, tree.iter().copied())?;
            let mut surplus = 0;
            for x in 0..n {
                let dt = t.bfs_from(x);
                for y in 0..n {
                    surplus = surplus.max(dt[y].unwrap() - dg[x][y].unwrap());
                }
            }
            if best.as_ref().is_none_or(|(s, _)| surplus < *s) {
                best = Some((surplus, tree));
                if surplus == 0 {
                    break;
                }
            }
        }
        if !crate::separators::next_combination(&mut pick, edges.len()) {
            break;
        }
    }
    let (s, tree) = best.expect("connected graphs have spanning trees");
    Ok((tree, s))
}

/// All local subtrees of the hierarchy, in node order then center order.
pub fn local_subtrees(h: &HierTree) -> Vec<LocalSubtree> {
    let mut out = Vec::new();
    for node in &h.nodes {
        let (hat, ids) = node.graph.meta_free();
        let to_original = |edges: Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            let mut e: Vec<_> = edges.into_iter().map(|(a, b)| (ids[a].min(ids[b]), ids[a].max(ids[b]))).collect();
            e.sort_unstable();
            e
        };
        if node.is_leaf() && h.k == 1 {
            let mut forest = Vec::new();
            for comp in hat.components(&crate::graph::VertexSet::empty(hat.n())) {
                let (sub, map) = hat.induced_ordered(&comp);
                let (tree, _) = optimal_tree_spanner_small(&sub).expect("k = 1 leaves have at most 5 vertices");
                forest.extend(tree.into_iter().map(|(a, b)| (map[a], map[b])));
            }
            out.push(LocalSubtree {
                level: node.depth,
                node: node.id,
                center_index: 0,
                root: None,
                edges: to_original(forest),
                source: SubtreeSource::OptimalLeafSpanner,
            });
            continue;
        }
        let source = if node.is_leaf() { SubtreeSource::DominatingBfs } else { SubtreeSource::BfsTree };
        for (l, kind) in node.center_kinds().into_iter().enumerate() {
            let VertexKind::Original(c) = kind else { continue };
            let local = ids.binary_search(&c).expect("original center survives meta removal");
            out.push(LocalSubtree {
                level: node.depth,
                node: node.id,
                center_index: l,
                root: Some(c),
                edges: to_original(bfs_tree(&hat, local)),
                source,
            });
        }
    }
    out
}

fn original_graph(h: &HierTree) -> &Graph {
    &h.nodes[h.root].graph.graph
}

/// Union of all local subtrees.
pub fn sparse_spanner(h: &HierTree) -> SpannerSystem {
    let mut edges: Vec<(usize, usize)> = local_subtrees(h).into_iter().flat_map(|t| t.edges).collect();
    edges.sort_unstable();
    edges.dedup();
    SpannerSystem {
        mode: SystemMode::SparseUnion,
        n: h.original_n,
        k: h.k,
        r_max: h.max_radius(),
        trees: vec![SpannerTree { level: None, center_index: None, edges }],
    }
}

/// One spanning tree per (level, center index): the level's vertex-disjoint
/// local subtrees, completed Kruskal-style by scanning the input edges in
/// ascending order.
pub fn collective_system(h: &HierTree) -> SpannerSystem {
    let g = original_graph(h);
    let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for t in local_subtrees(h) {
        groups.entry((t.level, t.center_index)).or_default().extend(t.edges);
    }
    let trees = groups
        .into_iter()
        .map(|((level, l), forest)| {
            let mut uf = UnionFind::new(g.n());
            let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
            for &(u, v) in &forest {
                let merged = uf.union(u, v);
                debug_assert!(merged, "local subtrees of one level are vertex-disjoint");
                edges.push((u, v));
            }
            for (u, v) in g.edges() {
                if uf.union(u, v) {
                    edges.push((u, v));
                }
            }
            edges.sort_unstable();
            SpannerTree { level: Some(level), center_index: Some(l), edges }
        })
        .collect();
    SpannerSystem { mode: SystemMode::Collective, n: h.original_n, k: h.k, r_max: h.max_radius(), trees }
}

/// Additive surplus guaranteed for a hierarchy with `k` disks per separator
/// and maximal radius `r_max` on `n` vertices; `r_max` is clamped to 1.
pub fn surplus_bound_for(n: usize, k: usize, r_max: u32) -> f64 {
    if n <= 1 {
        return 0.0;
    }
    let rho = f64::from(r_max.max(1));
    let log = (n as f64).log2();
    if k == 1 {
        2.0 * rho * log - 1.0
    } else {
        2.0 * rho * (1.0 + log)
    }
}

pub fn surplus_bound(h: &HierTree) -> f64 {
    surplus_bound_for(h.original_n, h.k, h.max_radius())
}

/// Edge budget of the sparse union.
pub fn edge_bound(n: usize, k: usize) -> f64 {
    if n <= 1 {
        return 0.0;
    }
    let log = (n as f64).log2();
    if k == 1 {
        n as f64 * log
    } else {
        (k * (n - 1)) as f64 * (1.0 + log)
    }
}

/// Budget on the number of trees in a collective system.
pub fn tree_count_bound(n: usize, k: usize) -> f64 {
    let log = (n.max(2) as f64).log2();
    if k == 1 {
        log
    } else {
        k as f64 * (1.0 + log)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::hierarchy::build_hierarchy;

    fn surplus_of(g: &Graph, edges: &[(usize, usize)]) -> u32 {
        let t = g.edge_subgraph(edges).unwrap();
        let mut s = 0;
        for x in g.vertices() {
            let (dg, dt) = (g.bfs_from(x), t.bfs_from(x));
            for y in g.vertices() {
                s = s.max(dt[y].unwrap() - dg[y].unwrap());
            }
        }
        s
    }

    #[test]
    fn small_optimal_spanners() {
        let (t, s) = optimal_tree_spanner_small(&path(4)).unwrap();
        assert_eq!((t, s), (path(4).edges(), 0));
        assert_eq!(optimal_tree_spanner_small(&complete(3)).unwrap().1, 1);
        // every spanning tree of C5 is a 4-path with surplus 3
        assert_eq!(optimal_tree_spanner_small(&cycle(5)).unwrap().1, 3);
        assert_eq!(optimal_tree_spanner_small(&cycle(4)).unwrap().1, 2);
        assert!(matches!(optimal_tree_spanner_small(&path(9)), Err(Error::Refused(_))));
        assert_eq!(optimal_tree_spanner_small(&Graph::empty(1)).unwrap(), (vec![], 0));
    }

    #[test]
    fn bfs_tree_prefers_small_parents() {
        // C4 from 0: vertex 2 has parents 1 and 3 available, picks 1
        assert_eq!(bfs_tree(&cycle(4), 0), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn single_leaf_c4() {
        let h = build_hierarchy(&cycle(4), 1).unwrap();
        let subs = local_subtrees(&h);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].source, SubtreeSource::OptimalLeafSpanner);
        assert_eq!(surplus_of(&cycle(4), &subs[0].edges), 2);
    }

    #[test]
    fn cycle6_subtrees() {
        let g = cycle(6);
        let h = build_hierarchy(&g, 1).unwrap();
        let subs = local_subtrees(&h);
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].root, Some(0));
        assert_eq!(subs[0].edges, bfs_tree(&g, 0));
        assert_eq!(subs[1].edges, vec![(2, 3), (3, 4)]);
        let sys = sparse_spanner(&h);
        let edges = &sys.trees[0].edges;
        assert!(surplus_of(&g, edges) as f64 <= surplus_bound(&h));
    }

    #[test]
    fn trees_reproduce_themselves() {
        let t = Graph::from_edges(9, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7), (7, 8)]).unwrap();
        let h = build_hierarchy(&t, 1).unwrap();
        assert_eq!(sparse_spanner(&h).trees[0].edges, t.edges());
        let sys = collective_system(&h);
        assert!(sys.trees.iter().all(|tr| tr.edges == t.edges()));
    }

    #[test]
    fn meta_centers_emit_nothing() {
        let g = grid(5, 6);
        let h = build_hierarchy(&g, 2).unwrap();
        let subs = local_subtrees(&h);
        let expected: usize = h
            .nodes
            .iter()
            .map(|n| n.center_kinds().iter().filter(|c| !c.is_meta()).count())
            .sum();
        assert_eq!(subs.len(), expected);
    }

    #[test]
    fn collective_trees_span() {
        let g = grid(6, 6);
        for k in 1..=2 {
            let h = build_hierarchy(&g, k).unwrap();
            let sys = collective_system(&h);
            assert!(sys.trees.len() as f64 <= tree_count_bound(36, k));
            for t in sys.tree_graphs(&g).unwrap() {
                assert!(t.is_tree());
            }
        }
    }
}
