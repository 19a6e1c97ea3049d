use std::collections::HashMap;

use rayon::prelude::*;

use super::{apsp, cover::min_cover_radius, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`brute_tree_breadth`].
pub const BRUTE_BREADTH_CAP: usize = 16;
/// Largest order accepted by [`tree_breadth_by_supergraphs`].
pub const SUPERGRAPH_CAP: usize = 7;

fn precheck(g: &Graph, k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Contract("k must be at least 1".into()));
    }
    if g.n() > cap {
        return Err(Error::Refused(format!("exact tree-breadth is capped at {cap} vertices, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect()
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn cover_cost(d: &DistanceMatrix, mask: u32, k: usize) -> u32 {
    min_cover_radius(d, &members(mask), k).expect("connected graph")
}

/// Exact `k`-tree-breadth: the least `r` such that some tree decomposition
/// has every bag covered by `k` radius-`r` disks.
///
/// Minimizes over elimination orderings with a dynamic program on the set
/// of eliminated vertices. Eliminating `v` after the set `S` creates the
/// bag `{v}` plus every uneliminated vertex reachable from `v` through `S`,
/// so every chordal completion (and hence every decomposition, up to bag
/// inclusion) is visited.
pub fn brute_tree_breadth(g: &Graph, k: usize) -> Result<u32> {
    precheck(g, k, BRUTE_BREADTH_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let d = apsp(g);
    let adj = adjacency_masks(g);
    let mut cost_memo: HashMap<u32, u32> = HashMap::new();
    let mut best = vec![u32::MAX; 1 << n];
    best[0] = 0;
    for set in 1u32..1 << n {
        let mut value = u32::MAX;
        for v in members(set) {
            let before = set & !(1 << v);
            if best[before as usize] >= value {
                continue;
            }
            let bag = elimination_bag(&adj, before, v);
            let c = *cost_memo.entry(bag).or_insert_with(|| cover_cost(&d, bag, k));
            value = value.min(best[before as usize].max(c));
        }
        best[set as usize] = value;
    }
    Ok(best[(1usize << n) - 1])
}

fn elimination_bag(adj: &[u32], eliminated: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = seen;
    let mut bag = seen;
    while frontier != 0 {
        let reach = members(frontier).into_iter().fold(0, |m, u| m | adj[u]) & !seen;
        seen |= reach;
        bag |= reach & !eliminated;
        frontier = reach & eliminated;
    }
    bag
}

/// Same value as [`brute_tree_breadth`], computed literally: every chordal
/// supergraph obtained by adding non-edges, scored by its worst maximal
/// clique.
pub fn tree_breadth_by_supergraphs(g: &Graph, k: usize) -> Result<u32> {
    precheck(g, k, SUPERGRAPH_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let d = apsp(g);
    let cost: Vec<u32> = (0u32..1 << n).map(|m| if m == 0 { 0 } else { cover_cost(&d, m, k) }).collect();
    let base = adjacency_masks(g);
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let best = (0u64..1 << non_edges.len())
        .into_par_iter()
        .filter_map(|added| {
            let mut adj = base.clone();
            for (i, &(u, v)) in non_edges.iter().enumerate() {
                if added >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            simplicial_cliques(&adj).map(|cliques| cliques.into_iter().map(|c| cost[c as usize]).max().unwrap_or(0))
        })
        .min()
        .expect("the complete graph is a chordal supergraph");
    Ok(best)
}

/// Peels simplicial vertices; returns the closed neighborhoods seen at
/// removal time (a superset of the maximal cliques) or `None` if stuck.
fn simplicial_cliques(adj: &[u32]) -> Option<Vec<u32>> {
    let n = adj.len();
    let mut alive: u32 = (1 << n) - 1;
    let mut cliques = Vec::with_capacity(n);
    while alive != 0 {
        let v = members(alive).into_iter().find(|&v| {
            let nb = adj[v] & alive;
            members(nb).into_iter().all(|u| nb & !(1 << u) & !adj[u] == 0)
        })?;
        cliques.push((adj[v] & alive) | 1 << v);
        alive &= !(1 << v);
    }
    Some(cliques)
}
