//! Tree decompositions: validation, width/length/breadth metrics, disk
//! expansion of bags, and lifting a decomposition of a spanner to the host.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::unionfind::UnionFind;
use crate::verify::{self, greedy_cover_radius, min_cover_radius, DistanceMatrix};

/// Exact k-breadth is only attempted for `k` up to this value...
pub const EXACT_K_CAP: usize = 3;
/// ...and bags up to this size.
pub const EXACT_BAG_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Sorted bags.
    pub bags: Vec<Vec<usize>>,
    /// Edges between bag indices.
    pub tree_edges: Vec<(usize, usize)>,
    pub host_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    HostMismatch { declared: usize, actual: usize },
    VertexOutOfRange { bag: usize, vertex: usize },
    BadTreeEdge { a: usize, b: usize },
    /// The bag graph has a cycle or is disconnected.
    NotATree,
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    /// The bags holding this vertex are not connected in the tree.
    NotSubtree { vertex: usize },
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>, host_n: usize) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges, host_n }
    }

    /// Single bag holding every vertex.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition { bags: vec![(0..n).collect()], tree_edges: Vec::new(), host_n: n }
    }

    /// Decomposition read off an elimination order: each vertex's bag is the
    /// vertex plus its later neighbors in the fill-in graph, attached to the
    /// bag of the earliest of those neighbors.
    pub fn from_elimination_order(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::Contract("elimination order must be a permutation".into()));
            }
            pos[v] = i;
        }
        if order.len() != n {
            return Err(Error::Contract("elimination order must be a permutation".into()));
        }
        let mut later: Vec<std::collections::BTreeSet<usize>> =
            g.vertices().map(|v| g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect()).collect();
        let mut bags = Vec::with_capacity(n);
        let mut tree_edges = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            let nb: Vec<usize> = later[v].iter().copied().collect();
            if let Some(&first) = nb.iter().min_by_key(|&&w| pos[w]) {
                for &w in &nb {
                    if w != first {
                        let (a, b) = if pos[first] < pos[w] { (first, w) } else { (w, first) };
                        later[a].insert(b);
                    }
                }
                tree_edges.push((i, pos[first]));
            } else if i + 1 < n {
                // a new component: hang it off the next bag to keep one tree
                tree_edges.push((i, i + 1));
            }
            let mut bag = nb;
            bag.push(v);
            bags.push(bag);
        }
        Ok(Self::new(bags, tree_edges, n))
    }

    pub fn num_bags(&self) -> usize {
        self.bags.len()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Every way `td` fails to be a tree decomposition of `g`.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.n();
    if td.host_n != n {
        out.push(Violation::HostMismatch { declared: td.host_n, actual: n });
    }
    let nb = td.bags.len();
    for (i, bag) in td.bags.iter().enumerate() {
        out.extend(bag.iter().filter(|&&v| v >= n).map(|&v| Violation::VertexOutOfRange { bag: i, vertex: v }));
    }
    let mut uf = UnionFind::new(nb);
    let mut tree_adj = vec![Vec::new(); nb];
    let mut acyclic = true;
    for &(a, b) in &td.tree_edges {
        if a >= nb || b >= nb || a == b {
            out.push(Violation::BadTreeEdge { a, b });
            continue;
        }
        acyclic &= uf.union(a, b);
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }
    if nb > 0 && (!acyclic || uf.set_size(0) != nb) {
        out.push(Violation::NotATree);
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag.iter().filter(|&&v| v < n) {
            holders[v].push(i);
        }
    }
    for v in 0..n {
        if holders[v].is_empty() {
            out.push(Violation::VertexUncovered { vertex: v });
        }
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&i| td.bags[i].binary_search(&v).is_ok()) {
            out.push(Violation::EdgeUncovered { u, v });
        }
    }
    let mut mark = vec![false; nb];
    for v in 0..n {
        let Some(&start) = holders[v].first() else { continue };
        for &i in &holders[v] {
            mark[i] = true;
        }
        let mut stack = vec![start];
        let mut reached = 0;
        mark[start] = false;
        while let Some(i) = stack.pop() {
            reached += 1;
            for &j in &tree_adj[i] {
                if mark[j] {
                    mark[j] = false;
                    stack.push(j);
                }
            }
        }
        if reached != holders[v].len() {
            out.push(Violation::NotSubtree { vertex: v });
            for &i in &holders[v] {
                mark[i] = false;
            }
        }
    }
    out
}

pub fn is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    validate(g, td).is_empty()
}

fn require_valid(g: &Graph, td: &TreeDecomposition, what: &str) -> Result<()> {
    match validate(g, td).first() {
        None => Ok(()),
        Some(v) => Err(Error::Contract(format!("invalid decomposition of {what}: {v:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub width: usize,
    /// Largest distance in the graph between two vertices of one bag.
    pub length: u32,
    /// Largest over bags of the smallest radius of one disk covering it.
    pub breadth: u32,
    pub k: usize,
    pub k_breadth: u32,
    /// False when `k_breadth` is only a greedy upper bound.
    pub k_breadth_exact: bool,
}

pub fn metrics(g: &Graph, td: &TreeDecomposition, k: usize, allow_greedy: bool) -> Result<Metrics> {
    if k == 0 {
        return Err(Error::Contract("k must be at least 1".into()));
    }
    require_valid(g, td, "the input graph")?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let over_cap = td.bags.iter().any(|b| b.len() > k && (k > EXACT_K_CAP || b.len() > EXACT_BAG_CAP));
    if over_cap && !allow_greedy {
        return Err(Error::Refused(format!(
            "exact {k}-breadth needs k <= {EXACT_K_CAP} and bags of at most {EXACT_BAG_CAP} vertices; allow the greedy bound instead"
        )));
    }
    let d = verify::apsp(g);
    let per_bag: Vec<(u32, u32, u32)> = td
        .bags
        .par_iter()
        .map(|bag| {
            let kb = if over_cap {
                greedy_cover_radius(&d, bag, k)
            } else {
                min_cover_radius(&d, bag, k)
            };
            (bag_length(&d, bag), bag_radius(&d, bag), kb.expect("connected graph"))
        })
        .collect();
    Ok(Metrics {
        width: td.width(),
        length: per_bag.iter().map(|x| x.0).max().unwrap_or(0),
        breadth: per_bag.iter().map(|x| x.1).max().unwrap_or(0),
        k,
        k_breadth: per_bag.iter().map(|x| x.2).max().unwrap_or(0),
        k_breadth_exact: !over_cap,
    })
}

fn bag_length(d: &DistanceMatrix, bag: &[usize]) -> u32 {
    bag.iter().flat_map(|&u| bag.iter().map(move |&v| d.get(u, v).unwrap())).max().unwrap_or(0)
}

fn bag_radius(d: &DistanceMatrix, bag: &[usize]) -> u32 {
    if bag.is_empty() {
        return 0;
    }
    (0..d.n()).map(|c| bag.iter().map(|&x| d.get(c, x).unwrap()).max().unwrap()).min().unwrap_or(0)
}

/// Replaces every bag by its radius-`r` neighborhood in `h`; the tree is kept.
pub fn expand(h: &Graph, td: &TreeDecomposition, r: u32) -> TreeDecomposition {
    let bags = td.bags.par_iter().map(|bag| h.disk_of_set(bag.iter().copied(), r).to_vec()).collect();
    TreeDecomposition { bags, tree_edges: td.tree_edges.clone(), host_n: td.host_n }
}

/// Turns a decomposition of a `t`-spanner `h` of `g` into a decomposition
/// of `g` whose bags are each covered by `width + 1` disks of radius
/// `ceil(t / 2)`.
pub fn lift(g: &Graph, h: &Graph, td_of_h: &TreeDecomposition, t: u32) -> Result<TreeDecomposition> {
    if t == 0 {
        return Err(Error::Contract("stretch must be at least 1".into()));
    }
    verify::check_t_spanner(g, h, t)?;
    require_valid(h, td_of_h, "the spanner")?;
    Ok(expand(h, td_of_h, t.div_ceil(2)))
}

/// True if every lifted bag lies within distance `r` in `g` of the
/// corresponding original bag.
pub fn bags_within_disks(g: &Graph, original: &TreeDecomposition, lifted: &TreeDecomposition, r: u32) -> bool {
    original.bags.len() == lifted.bags.len()
        && original.bags.par_iter().zip(&lifted.bags).all(|(small, big)| {
            let disk: VertexSet = g.disk_of_set(small.iter().copied(), r);
            big.iter().all(|&v| disk.contains(v))
        })
}

/// PACE `.td` text, with 1-based bag ids and vertices.
pub fn to_pace(td: &TreeDecomposition) -> String {
    let mut s = String::new();
    writeln!(s, "s td {} {} {}", td.bags.len(), td.max_bag(), td.host_n).unwrap();
    for (i, bag) in td.bags.iter().enumerate() {
        write!(s, "b {}", i + 1).unwrap();
        for v in bag {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    for &(a, b) in &td.tree_edges {
        writeln!(s, "{} {}", a + 1, b + 1).unwrap();
    }
    s
}

pub fn parse_pace(text: &str) -> Result<TreeDecomposition> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("expected a number, got {s:?}")));
        match fields.first().copied() {
            None | Some("c") => {}
            Some("s") => {
                if header.is_some() {
                    return Err(err(line, "duplicate solution line".into()));
                }
                if fields.len() != 5 || fields[1] != "td" {
                    return Err(err(line, "expected `s td <bags> <max bag size> <vertices>`".into()));
                }
                let (nb, mb, n) = (num(fields[2])?, num(fields[3])?, num(fields[4])?);
                bags = vec![None; nb];
                header = Some((nb, mb, n, line));
            }
            Some("b") => {
                let (nb, _, n, _) = header.ok_or_else(|| err(line, "bag before solution line".into()))?;
                let id = num(fields.get(1).ok_or_else(|| err(line, "missing bag id".into()))?)?;
                if id == 0 || id > nb {
                    return Err(err(line, format!("bag id {id} outside 1..={nb}")));
                }
                if bags[id - 1].is_some() {
                    return Err(err(line, format!("bag {id} given twice")));
                }
                let mut bag = Vec::with_capacity(fields.len() - 2);
                for f in &fields[2..] {
                    let v = num(f)?;
                    if v == 0 || v > n {
                        return Err(err(line, format!("vertex {v} outside 1..={n}")));
                    }
                    bag.push(v - 1);
                }
                bag.sort_unstable();
                bag.dedup();
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                let (nb, _, _, _) = header.ok_or_else(|| err(line, "tree edge before solution line".into()))?;
                if fields.len() != 2 {
                    return Err(err(line, "expected a tree edge `i j`".into()));
                }
                let (a, b) = (num(fields[0])?, num(fields[1])?);
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(err(line, format!("tree edge ({a}, {b}) outside 1..={nb}")));
                }
                tree_edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, max_bag, n, sline) = header.ok_or_else(|| err(1, "missing `s td` line".into()))?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(sline, format!("bag {} is never listed", i + 1))))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition { bags, tree_edges, host_n: n };
    if td.max_bag() != max_bag {
        return Err(err(sline, format!("declared largest bag {max_bag}, found {}", td.max_bag())));
    }
    Ok(td)
}
