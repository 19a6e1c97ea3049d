//! Seeded instance generators. Planted instances carry a certificate
//! (the planted spanner, decomposition, or elimination order) that
//! [`verify_certificate`] rechecks without trusting the generator.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::treedec::{self, TreeDecomposition};
use crate::unionfind::UnionFind;
use crate::verify::{self, chordal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Cycle { len: usize },
    Chordal { n: usize },
    Grid { rows: usize, cols: usize },
    /// Random spanning tree plus random chords.
    Connected { n: usize, extra: usize },
    PlantedTreeSpanner { n: usize, t: u32, extra: usize },
    PlantedTwSpanner { n: usize, k: usize, t: u32, extra: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: Option<Family>,
    pub seed: u64,
    /// Exact tree-breadth.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tree_breadth: Option<u32>,
    /// `(k, r)`: the `k`-tree-breadth is at most `r`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub breadth_upper: Option<(usize, u32)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stretch: Option<u32>,
    /// Planted spanning subgraph that is a `stretch`-spanner.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spanner_edges: Option<Vec<(usize, usize)>>,
    /// Decomposition of the planted spanner.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decomposition: Option<TreeDecomposition>,
    /// Perfect elimination ordering of a chordal instance.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elimination_order: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub certificate: Certificate,
}

impl Instance {
    pub fn planted_spanner(&self) -> Option<Graph> {
        let edges = self.certificate.spanner_edges.as_ref()?;
        self.graph.edge_subgraph(edges).ok()
    }
}

fn refuse(msg: impl Into<String>) -> Error {
    Error::Refused(msg.into())
}

pub fn generate(family: Family, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cert = Certificate { family: Some(family), seed, ..Default::default() };
    let graph = match family {
        Family::Cycle { len } => {
            if len < 3 {
                return Err(refuse("cycles need at least 3 vertices"));
            }
            // a central triangle of any triangulation has all gaps at most len/2
            cert.tree_breadth = Some(len.div_ceil(4) as u32);
            named::cycle(len)
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(refuse("grid dimensions must be positive"));
            }
            named::grid(rows, cols)
        }
        Family::Chordal { n } => {
            if n == 0 {
                return Err(refuse("chordal graphs need at least one vertex"));
            }
            let (g, peo) = random_chordal(n, &mut rng);
            if n > 1 {
                cert.tree_breadth = Some(1);
            }
            cert.elimination_order = Some(peo);
            g
        }
        Family::Connected { n, extra } => {
            if n == 0 {
                return Err(refuse("connected graphs need at least one vertex"));
            }
            let tree = random_tree(n, &mut rng);
            let free = n * (n - 1) / 2 - tree.len();
            if extra > free {
                return Err(refuse(format!("only {free} non-tree pairs are available")));
            }
            let mut edges: BTreeSet<(usize, usize)> = tree.into_iter().collect();
            while edges.len() < n - 1 + extra {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
            Graph::from_edges(n, edges)?
        }
        Family::PlantedTreeSpanner { n, t, extra } => {
            if n == 0 || t == 0 {
                return Err(refuse("planted tree spanners need n >= 1 and t >= 1"));
            }
            let tree_edges = random_tree(n, &mut rng);
            let tree = Graph::from_edges(n, tree_edges.iter().copied())?;
            let g = add_short_chords(&tree, t, extra, &mut rng)?;
            cert.stretch = Some(t);
            cert.breadth_upper = Some((1, t.div_ceil(2)));
            cert.spanner_edges = Some(tree.edges());
            g
        }
        Family::PlantedTwSpanner { n, k, t, extra } => {
            if k == 0 || t == 0 || n <= k {
                return Err(refuse("planted tree-width spanners need k >= 1, t >= 1 and n > k"));
            }
            let (h, td) = random_partial_k_tree(n, k, &mut rng)?;
            let g = add_short_chords(&h, t, extra, &mut rng)?;
            cert.stretch = Some(t);
            cert.breadth_upper = Some((k + 1, t.div_ceil(2)));
            cert.spanner_edges = Some(h.edges());
            cert.decomposition = Some(td);
            g
        }
    };
    Ok(Instance { graph, certificate: cert })
}

/// Uniform labeled tree via a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    edges.sort_unstable();
    edges
}

/// Each new vertex joins a random earlier vertex `p` and a random part of
/// the clique `p` was attached to. Returns the graph and a perfect
/// elimination ordering (reverse insertion order).
fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> (Graph, Vec<usize>) {
    let mut attach: Vec<Vec<usize>> = vec![Vec::new()];
    let mut edges = Vec::new();
    for v in 1..n {
        let p = rng.gen_range(0..v);
        let mut clique: Vec<usize> = attach[p].iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        clique.push(p);
        edges.extend(clique.iter().map(|&u| (u, v)));
        attach.push(clique);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let g = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("valid ids");
    let peo = (0..n).rev().map(|v| perm[v]).collect();
    (g, peo)
}

/// Random `k`-tree with a width-`k` decomposition, thinned to a random
/// connected spanning subgraph (the decomposition stays valid), with
/// vertex ids shuffled.
fn random_partial_k_tree(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<(Graph, TreeDecomposition)> {
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut tree_edges = Vec::new();
    // k-cliques available for attachment, with a bag containing each
    let mut faces: Vec<(Vec<usize>, usize)> = (0..=k).map(|skip| ((0..=k).filter(|&x| x != skip).collect(), 0)).collect();
    let mut edges: Vec<(usize, usize)> = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
    for v in k + 1..n {
        let (face, home) = faces[rng.gen_range(0..faces.len())].clone();
        let id = bags.len();
        let mut bag = face.clone();
        bag.push(v);
        edges.extend(face.iter().map(|&u| (u, v)));
        for skip in 0..k {
            let mut f: Vec<usize> = face.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, x)| x).collect();
            f.push(v);
            faces.push((f, id));
        }
        bags.push(bag);
        tree_edges.push((home, id));
    }
    edges.shuffle(rng);
    let mut uf = UnionFind::new(n);
    let kept: Vec<(usize, usize)> = edges.into_iter().filter(|&(u, v)| uf.union(u, v) || rng.gen_bool(0.5)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let h = Graph::from_edges(n, kept.into_iter().map(|(u, v)| (perm[u], perm[v])))?;
    let bags = bags.into_iter().map(|b| b.into_iter().map(|v| perm[v]).collect()).collect();
    Ok((h, TreeDecomposition::new(bags, tree_edges, n)))
}

/// Adds `extra` distinct random edges between vertices at distance 2..=t
/// in `base`.
fn add_short_chords(base: &Graph, t: u32, extra: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut candidates = Vec::new();
    for u in base.vertices() {
        let d = base.bfs_from_iter(std::iter::once(u), Some(t));
        candidates.extend((u + 1..base.n()).filter(|&v| d[v].is_some_and(|x| x >= 2)).map(|v| (u, v)));
    }
    if candidates.len() < extra {
        return Err(refuse(format!("only {} pairs lie within distance {t}, asked for {extra}", candidates.len())));
    }
    let chosen = candidates.into_iter().choose_multiple(rng, extra);
    Graph::from_edges(base.n(), base.edges().into_iter().chain(chosen))
}

/// Rechecks a certificate against the graph by independent means: the
/// planted spanner's stretch by the edge criterion, the decomposition by
/// validation, chordality by elimination order, cycle breadth by the exact
/// oracle when small enough.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<()> {
    let bad = |msg: String| Err(Error::Contract(format!("certificate rejected: {msg}")));
    if let Some(edges) = &cert.spanner_edges {
        let h = g.edge_subgraph(edges)?;
        if !h.is_connected() {
            return bad("planted spanner is not connected".into());
        }
        let t = cert.stretch.ok_or_else(|| Error::Contract("spanner without stretch".into()))?;
        verify::check_t_spanner(g, &h, t)?;
        match (&cert.decomposition, cert.breadth_upper) {
            (Some(td), Some((k, _))) => {
                if let Some(v) = treedec::validate(&h, td).first() {
                    return bad(format!("planted decomposition invalid: {v:?}"));
                }
                if td.width() + 1 > k {
                    return bad(format!("planted decomposition has width {}", td.width()));
                }
            }
            (None, _) => {
                if !h.is_tree() {
                    return bad("planted spanner is not a tree".into());
                }
            }
            (Some(_), None) => return bad("decomposition without a breadth claim".into()),
        }
    }
    if let Some(order) = &cert.elimination_order {
        let td = TreeDecomposition::from_elimination_order(g, order)?;
        let cliques = td.bags.iter().all(|b| b.iter().all(|&u| b.iter().all(|&v| u == v || g.has_edge(u, v))));
        if !cliques || !chordal::is_chordal(g) {
            return bad("elimination order is not perfect".into());
        }
    }
    if let (Some(tb), Some(Family::Cycle { len })) = (cert.tree_breadth, cert.family) {
        if *g != named::cycle(len) {
            return bad("graph is not the advertised cycle".into());
        }
        if len <= verify::BRUTE_BREADTH_CAP && verify::brute_tree_breadth(g, 1)? != tb {
            return bad("cycle breadth does not match".into());
        }
    }
    Ok(())
}
