//! Brute-force checkers shared by the property and acceptance suites.
#![allow(dead_code)]

use rand::Rng;

use spannerweave::graph::{Graph, VertexSet};
use spannerweave::hierarchy::{build_hierarchy, HierTree};
use spannerweave::separators::{best_disk_separator, best_k_disk_separator, is_balanced};
use spannerweave::verify::{self, brute_tree_breadth};
use spannerweave::Error;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Connected graph made of a spanning tree plus extra edges, kept apart so
/// spanners can be carved out of it.
#[derive(Debug, Clone)]
pub struct Sample {
    pub g: Graph,
    pub tree: Vec<(usize, usize)>,
    pub extra: Vec<(usize, usize)>,
}

impl Sample {
    /// `parents[i] < i` picks the tree parent of `i`; `coin(u, v)` decides
    /// the remaining pairs.
    pub fn build(n: usize, parents: &[usize], mut coin: impl FnMut(usize, usize) -> bool) -> Self {
        let tree: Vec<(usize, usize)> = (1..n).map(|i| (parents[i], i)).collect();
        let mut extra = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if coin(u, v) && !tree.contains(&(u, v)) {
                    extra.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, tree.iter().chain(&extra).copied()).unwrap();
        Sample { g, tree, extra }
    }

    pub fn random(rng: &mut impl Rng, min_n: usize, max_n: usize, density: f64) -> Self {
        let n = rng.gen_range(min_n..=max_n);
        let parents: Vec<usize> = (0..n).map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) }).collect();
        Sample::build(n, &parents, |_, _| rng.gen_bool(density))
    }

    /// Spanning subgraph: the tree plus the extra edges whose flag is set.
    pub fn subgraph(&self, keep: &[bool]) -> Graph {
        let kept = self.extra.iter().zip(keep).filter(|(_, &b)| b).map(|(&e, _)| e);
        Graph::from_edges(self.g.n(), self.tree.iter().copied().chain(kept)).unwrap()
    }
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if d[u][v].map_or(true, |c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Smallest radius over every `k`-subset of centers, checked directly.
pub fn brute_separator_radius(g: &Graph, k: usize) -> u32 {
    let n = g.n();
    let mut best = u32::MAX;
    let mut tuple: Vec<usize> = (0..k.min(n)).collect();
    loop {
        let r = (0..n as u32).find(|&r| is_balanced(g, &g.disk_of_set(tuple.iter().copied(), r))).unwrap();
        best = best.min(r);
        // next k-subset in lexicographic order
        let Some(i) = (0..tuple.len()).rev().find(|&i| tuple[i] < n - tuple.len() + i) else { break };
        tuple[i] += 1;
        for j in i + 1..tuple.len() {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
    best
}

pub fn ancestor_union(h: &HierTree, x: usize, y: usize) -> Vec<usize> {
    h.common_ancestors(h.node_of_vertex[x], h.node_of_vertex[y])
}

pub fn all_shortest_paths(g: &Graph, x: usize, y: usize) -> Vec<Vec<usize>> {
    let to_y = g.bfs_from(y);
    let mut out = Vec::new();
    let mut stack = vec![vec![x]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if last == y {
            out.push(path);
            continue;
        }
        for &w in g.neighbors(last) {
            if to_y[w].unwrap() + 1 == to_y[last].unwrap() {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

/// Separator search agrees with the brute-force radius for k = 1..=3.
pub fn separator_matches_brute_force(g: &Graph) -> Check {
    let one = best_disk_separator(g).unwrap();
    ensure!(one.radius == brute_separator_radius(g, 1), "k=1 radius {} differs", one.radius);
    ensure!(is_balanced(g, &one.cover), "k=1 cover is not balanced");
    for k in 2..=3.min(g.n()) {
        let sep = best_k_disk_separator(g, k).unwrap();
        let brute = brute_separator_radius(g, k);
        ensure!(sep.radius == brute, "k={k} radius {} but brute force {brute}", sep.radius);
    }
    Ok(())
}

/// Contracting any edge never raises the tree-breadth.
pub fn tree_breadth_survives_contraction(g: &Graph) -> Check {
    let tb = brute_tree_breadth(g, 1).unwrap();
    for (a, b) in g.edges() {
        let (small, _) = g.contract_edge(a, b).unwrap();
        let after = brute_tree_breadth(&small, 1).unwrap();
        ensure!(after <= tb, "contracting ({a}, {b}) raises tree-breadth {tb} to {after}");
    }
    Ok(())
}

/// Removing the bags of the common ancestors of `x` and `y` disconnects them.
pub fn ancestor_bags_cut_every_path(g: &Graph, k: usize) -> Check {
    let h = build_hierarchy(g, k).unwrap();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            let mut blocked = VertexSet::empty(g.n());
            for id in ancestor_union(&h, x, y) {
                for v in h.node(id).bag_original_ids() {
                    blocked.insert(v);
                }
            }
            if blocked.contains(x) || blocked.contains(y) {
                continue;
            }
            let comps = g.components(&blocked);
            let same = comps.iter().any(|c| c.contains(&x) && c.contains(&y));
            ensure!(!same, "{x}-{y} path avoids all common ancestor bags");
        }
    }
    Ok(())
}

/// For every shortest `x`-`y` path, each common ancestor down to the first
/// one whose bag meets the path keeps `d(x, y)` exact in its graph.
pub fn shallow_ancestors_keep_distances(g: &Graph, k: usize) -> Check {
    let h = build_hierarchy(g, k).unwrap();
    let d = floyd_warshall(g);
    let minors: Vec<(Graph, Vec<usize>)> = h.nodes.iter().map(|node| node.graph.meta_free()).collect();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            let chain = ancestor_union(&h, x, y);
            for path in all_shortest_paths(g, x, y) {
                let Some(first_hit) =
                    chain.iter().position(|&id| h.node(id).bag_original_ids().iter().any(|v| path.contains(v)))
                else {
                    return Err(format!("no ancestor bag meets a shortest {x}-{y} path"));
                };
                for &id in &chain[..=first_hit] {
                    let (minor, ids) = &minors[id];
                    let lx = ids.binary_search(&x).unwrap();
                    let ly = ids.binary_search(&y).unwrap();
                    ensure!(minor.bfs_from(lx)[ly] == d[x][y], "node {id} stretches {x}-{y}");
                }
            }
        }
    }
    Ok(())
}

/// The largest edge stretch `t` makes `h` a `t`-spanner over all pairs, and
/// `t - 1` is rejected.
pub fn edge_stretch_bounds_all_pairs(g: &Graph, h: &Graph) -> Check {
    let t = verify::max_edge_stretch(g, h).unwrap().unwrap();
    ensure!(verify::check_t_spanner(g, h, t).is_ok(), "edge stretch {t} rejected");
    let report = verify::surplus(g, h).unwrap();
    ensure!(report.max_stretch.num <= t * report.max_stretch.den, "pair stretch {} above {t}", report.max_stretch);
    if t > 1 {
        let tighter = verify::check_t_spanner(g, h, t - 1);
        ensure!(matches!(tighter, Err(Error::SpannerViolation { .. })), "t - 1 = {} accepted", t - 1);
    }
    Ok(())
}

pub fn stretch_at_most_surplus_plus_one(g: &Graph, h: &Graph) -> Check {
    let report = verify::surplus(g, h).unwrap();
    ensure!(
        report.max_stretch.num <= (report.max_surplus + 1) * report.max_stretch.den,
        "stretch {} with surplus {}",
        report.max_stretch,
        report.max_surplus
    );
    Ok(())
}
