//! Hierarchical decomposition tree built from balanced disk separators.
//!
//! Every node owns a graph `G(↓Y)`, a minor of the input. Internal nodes
//! store the separator `Y` (a union of `k` disks) and hand each residual
//! component to a child, after attaching meta vertices that stand in for the
//! removed disks. Leaves keep their whole (small) graph as the bag.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separators::{self, DiskSeparator, DEFAULT_K_CAP};

/// Provenance of a vertex inside a hierarchy graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKind {
    Original(usize),
    /// Stand-in for disk `disk` of the separator of hierarchy node `node`.
    Meta { node: usize, disk: usize },
}

impl VertexKind {
    pub fn original(self) -> Option<usize> {
        match self {
            VertexKind::Original(v) => Some(v),
            VertexKind::Meta { .. } => None,
        }
    }

    pub fn is_meta(self) -> bool {
        matches!(self, VertexKind::Meta { .. })
    }
}

/// A graph whose vertices carry [`VertexKind`] tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedGraph {
    pub graph: Graph,
    pub tags: Vec<VertexKind>,
}

impl AnnotatedGraph {
    /// Wraps an input graph; every vertex is original.
    pub fn from_original(g: &Graph) -> Self {
        AnnotatedGraph { graph: g.clone(), tags: g.vertices().map(VertexKind::Original).collect() }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn meta_count(&self) -> usize {
        self.tags.iter().filter(|t| t.is_meta()).count()
    }

    /// Original ids of all original vertices, ascending.
    pub fn original_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.tags.iter().filter_map(|t| t.original()).collect();
        ids.sort_unstable();
        ids
    }

    /// The graph with all meta vertices removed, relabeled so that new id
    /// `i` is the `i`-th smallest original id. Returns the graph and the
    /// new-id -> original-id map.
    pub fn meta_free(&self) -> (Graph, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.n()).filter(|&u| !self.tags[u].is_meta()).collect();
        order.sort_by_key(|&u| self.tags[u].original());
        let (g, _) = self.graph.induced_ordered(&order);
        let ids = order.iter().map(|&u| self.tags[u].original().unwrap()).collect();
        (g, ids)
    }

    /// Local id of an original vertex, if present.
    pub fn local_of_original(&self, v: usize) -> Option<usize> {
        self.tags.iter().position(|&t| t == VertexKind::Original(v))
    }
}

/// Splits `g` along a single-disk separator: one child per residual
/// component, each extended by a meta vertex adjacent to the component's
/// vertices that touch the removed disk.
pub fn split_k1(g: &AnnotatedGraph, sep: &DiskSeparator, node_id: usize) -> Vec<AnnotatedGraph> {
    let graph = &g.graph;
    let comps = graph.components(&sep.cover);
    let mut local = vec![usize::MAX; graph.n()];
    comps
        .into_iter()
        .map(|comp| {
            let meta = comp.len();
            let mut edges = Vec::new();
            for (i, &u) in comp.iter().enumerate() {
                local[u] = i;
            }
            for (i, &u) in comp.iter().enumerate() {
                for &w in graph.neighbors(u) {
                    if local[w] != usize::MAX {
                        if i < local[w] {
                            edges.push((i, local[w]));
                        }
                    } else if sep.cover.contains(w) {
                        edges.push((i, meta));
                    }
                }
            }
            for &u in &comp {
                local[u] = usize::MAX;
            }
            let mut tags: Vec<VertexKind> = comp.iter().map(|&u| g.tags[u]).collect();
            tags.push(VertexKind::Meta { node: node_id, disk: 0 });
            let graph = Graph::from_edges(meta + 1, edges).expect("local edges are valid");
            AnnotatedGraph { graph, tags }
        })
        .collect()
}

/// Partitions the union of the radius-`r` disks around `centers` into
/// disjoint connected pieces, one per center.
///
/// A dummy root adjacent to the centers (in list order) starts a BFS that
/// explores neighbors in ascending id; each vertex within distance `r` of
/// some center joins the piece of the center whose BFS subtree reaches it
/// first.
pub fn partition_disks(g: &Graph, centers: &[usize], r: u32) -> Vec<VertexSet> {
    let n = g.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![0u32; n];
    let mut queue = VecDeque::new();
    for (j, &c) in centers.iter().enumerate() {
        if owner[c].is_none() {
            owner[c] = Some(j);
            queue.push_back(c);
        }
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] >= r {
            continue;
        }
        for &w in g.neighbors(u) {
            if owner[w].is_none() {
                owner[w] = owner[u];
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut parts = vec![VertexSet::empty(n); centers.len()];
    for (u, o) in owner.iter().enumerate() {
        if let Some(j) = o {
            parts[*j].insert(u);
        }
    }
    parts
}

/// Splits `g` along disjoint separator pieces `parts` (one per center).
///
/// Each residual component `C` becomes a child with one meta vertex per
/// piece that `C` touches; two meta vertices are joined when their centers
/// lie in the same component of `g - C`.
pub fn split_general(
    g: &AnnotatedGraph,
    centers: &[usize],
    parts: &[VertexSet],
    node_id: usize,
) -> Vec<AnnotatedGraph> {
    let graph = &g.graph;
    let n = graph.n();
    let mut part_of = vec![usize::MAX; n];
    let mut cover = VertexSet::empty(n);
    for (j, p) in parts.iter().enumerate() {
        for u in p.iter() {
            part_of[u] = j;
            cover.insert(u);
        }
    }
    let k = parts.len();
    graph
        .components(&cover)
        .into_iter()
        .map(|comp| {
            let mut local = vec![usize::MAX; n];
            for (i, &u) in comp.iter().enumerate() {
                local[u] = i;
            }
            let mut touches = vec![Vec::new(); k];
            let mut edges = Vec::new();
            for (i, &u) in comp.iter().enumerate() {
                for &w in graph.neighbors(u) {
                    if local[w] != usize::MAX {
                        if i < local[w] {
                            edges.push((i, local[w]));
                        }
                    } else if part_of[w] != usize::MAX {
                        touches[part_of[w]].push(i);
                    }
                }
            }
            let mut tags: Vec<VertexKind> = comp.iter().map(|&u| g.tags[u]).collect();
            let mut meta_local = vec![None; k];
            for j in 0..k {
                if !touches[j].is_empty() {
                    meta_local[j] = Some(tags.len());
                    tags.push(VertexKind::Meta { node: node_id, disk: j });
                }
            }
            for j in 0..k {
                if let Some(mj) = meta_local[j] {
                    edges.extend(touches[j].iter().map(|&i| (i, mj)));
                }
            }
            // connectivity of centers outside this component
            let removed = VertexSet::from_iter(n, comp.iter().copied());
            let mut label = vec![usize::MAX; n];
            for (ci, c) in graph.components(&removed).iter().enumerate() {
                for &u in c {
                    label[u] = ci;
                }
            }
            for j in 0..k {
                for l in j + 1..k {
                    if let (Some(mj), Some(ml)) = (meta_local[j], meta_local[l]) {
                        if label[centers[j]] == label[centers[l]] {
                            edges.push((mj, ml));
                        }
                    }
                }
            }
            let graph = Graph::from_edges(tags.len(), edges).expect("local edges are valid");
            AnnotatedGraph { graph, tags }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Internal,
    Leaf,
}

/// One node `Y` of the hierarchy.
#[derive(Debug, Clone)]
pub struct HierNode {
    pub id: usize,
    pub depth: usize,
    pub parent: Option<usize>,
    pub kind: NodeKind,
    /// Local ids (in `graph`) of the disk centers. Empty for `k = 1` leaves.
    pub centers: Vec<usize>,
    pub radius: u32,
    /// Disjoint pieces of the separator, one per center (internal nodes).
    pub parts: Vec<VertexSet>,
    /// Local vertex set `Y`: the separator cover, or everything at a leaf.
    pub bag: VertexSet,
    pub graph: AnnotatedGraph,
    pub children: Vec<usize>,
}

impl HierNode {
    pub fn center_kinds(&self) -> Vec<VertexKind> {
        self.centers.iter().map(|&c| self.graph.tags[c]).collect()
    }

    pub fn bag_original_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.bag.iter().filter_map(|u| self.graph.tags[u].original()).collect();
        ids.sort_unstable();
        ids
    }

    pub fn is_leaf(&self) -> bool {
        self.kind == NodeKind::Leaf
    }
}

/// Rooted separator hierarchy; node 0 is the root and ids follow BFS order.
#[derive(Debug, Clone)]
pub struct HierTree {
    pub nodes: Vec<HierNode>,
    pub root: usize,
    pub k: usize,
    pub original_n: usize,
    pub original_m: usize,
    /// Node whose bag holds each original vertex.
    pub node_of_vertex: Vec<usize>,
}

/// Largest graph order kept as a leaf.
pub fn leaf_limit(k: usize) -> usize {
    if k == 1 {
        5
    } else {
        2 * k + 1
    }
}

pub fn build_hierarchy(g: &Graph, k: usize) -> Result<HierTree> {
    build_hierarchy_capped(g, k, DEFAULT_K_CAP)
}

pub fn build_hierarchy_capped(g: &Graph, k: usize, k_cap: usize) -> Result<HierTree> {
    if g.n() == 0 {
        return Err(Error::Contract("cannot decompose the empty graph".into()));
    }
    if k == 0 {
        return Err(Error::Contract("k must be at least 1".into()));
    }
    if k > k_cap {
        return Err(Error::Refused(format!("k = {k} exceeds the configured cap of {k_cap}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let mut nodes: Vec<HierNode> = Vec::new();
    let mut queue: VecDeque<(AnnotatedGraph, usize, Option<usize>)> = VecDeque::new();
    queue.push_back((AnnotatedGraph::from_original(g), 0, None));
    while let Some((ag, depth, parent)) = queue.pop_front() {
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        let n = ag.n();
        let node = if n <= leaf_limit(k) {
            let (centers, radius) = if k == 1 { (Vec::new(), 0) } else { (dominating_set(&ag, k), 1) };
            HierNode {
                id,
                depth,
                parent,
                kind: NodeKind::Leaf,
                centers,
                radius,
                parts: Vec::new(),
                bag: VertexSet::full(n),
                graph: ag,
                children: Vec::new(),
            }
        } else {
            let sep = separators::best_k_disk_separator_capped(&ag.graph, k, k_cap)?;
            let (children, parts) = if k == 1 {
                (split_k1(&ag, &sep, id), vec![sep.cover.clone()])
            } else {
                let parts = partition_disks(&ag.graph, &sep.centers, sep.radius);
                (split_general(&ag, &sep.centers, &parts, id), parts)
            };
            for child in children {
                queue.push_back((child, depth + 1, Some(id)));
            }
            HierNode {
                id,
                depth,
                parent,
                kind: NodeKind::Internal,
                centers: sep.centers,
                radius: sep.radius,
                parts,
                bag: sep.cover,
                graph: ag,
                children: Vec::new(),
            }
        };
        nodes.push(node);
    }

    let mut node_of_vertex = vec![usize::MAX; g.n()];
    for node in &nodes {
        for v in node.bag_original_ids() {
            node_of_vertex[v] = node.id;
        }
    }
    Ok(HierTree { nodes, root: 0, k, original_n: g.n(), original_m: g.m(), node_of_vertex })
}

/// Dominating set of size at most `k` for a small leaf graph. Prefers sets
/// with fewer meta vertices, then fewer vertices, then the smallest ids.
fn dominating_set(ag: &AnnotatedGraph, k: usize) -> Vec<usize> {
    let g = &ag.graph;
    let n = g.n();
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for size in 1..=k.min(n) {
        let mut t: Vec<usize> = (0..size).collect();
        loop {
            let covered = g.disk_of_set(t.iter().copied(), 1);
            if covered.len() == n {
                let metas = t.iter().filter(|&&u| ag.tags[u].is_meta()).count();
                let key = (metas, size, t.clone());
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
            if !separators::next_combination(&mut t, n) {
                break;
            }
        }
    }
    best.expect("graphs with at most 2k + 1 vertices have a dominating set of size k").2
}

impl HierTree {
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Largest separator radius over all nodes.
    pub fn max_radius(&self) -> u32 {
        self.nodes.iter().map(|n| n.radius).max().unwrap_or(0)
    }

    pub fn node(&self, id: usize) -> &HierNode {
        &self.nodes[id]
    }

    /// Node ids from the root down to `id`, inclusive.
    pub fn root_path(&self, id: usize) -> Vec<usize> {
        let mut path = vec![id];
        let mut cur = id;
        while let Some(p) = self.nodes[cur].parent {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Common ancestors of two nodes, root first.
    pub fn common_ancestors(&self, a: usize, b: usize) -> Vec<usize> {
        let pa = self.root_path(a);
        let pb = self.root_path(b);
        pa.iter().zip(&pb).take_while(|(x, y)| x == y).map(|(x, _)| *x).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<NodeJson> = self
            .nodes
            .iter()
            .map(|n| NodeJson {
                id: n.id,
                depth: n.depth,
                kind: n.kind,
                centers: n.center_kinds().into_iter().map(CenterJson::from).collect(),
                radius: n.radius,
                bag_original_ids: n.bag_original_ids(),
                graph_order: n.graph.n(),
                meta_vertices: n.graph.meta_count(),
                children: n.children.clone(),
            })
            .collect();
        serde_json::json!({
            "k": self.k,
            "n": self.original_n,
            "m": self.original_m,
            "depth": self.depth(),
            "max_radius": self.max_radius(),
            "nodes": nodes,
        })
    }

    /// Graphviz drawing of the hierarchy.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hierarchy {\n  node [shape=box, fontname=\"monospace\"];\n");
        for n in &self.nodes {
            let centers: Vec<String> = n
                .center_kinds()
                .iter()
                .map(|c| match c {
                    VertexKind::Original(v) => v.to_string(),
                    VertexKind::Meta { node, disk } => format!("m{node}.{disk}"),
                })
                .collect();
            let _ = writeln!(
                out,
                "  n{} [label=\"#{} {:?}\\nr={} c=[{}]\\nY={:?}\"];",
                n.id,
                n.id,
                n.kind,
                n.radius,
                centers.join(","),
                n.bag_original_ids()
            );
        }
        for n in &self.nodes {
            for c in &n.children {
                let _ = writeln!(out, "  n{} -> n{};", n.id, c);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    depth: usize,
    kind: NodeKind,
    centers: Vec<CenterJson>,
    radius: u32,
    bag_original_ids: Vec<usize>,
    graph_order: usize,
    meta_vertices: usize,
    children: Vec<usize>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CenterJson {
    Original(usize),
    Meta { meta_of_node: usize, disk: usize },
}

impl From<VertexKind> for CenterJson {
    fn from(k: VertexKind) -> Self {
        match k {
            VertexKind::Original(v) => CenterJson::Original(v),
            VertexKind::Meta { node, disk } => CenterJson::Meta { meta_of_node: node, disk },
        }
    }
}
