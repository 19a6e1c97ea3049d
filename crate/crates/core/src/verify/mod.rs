//! Exact distance checks: all-pairs distances, additive surplus and
//! multiplicative stretch of subgraphs and tree collections, and exact
//! tree-breadth oracles for small graphs.

mod breadth;
pub mod chordal;
mod cover;

pub use breadth::{brute_tree_breadth, tree_breadth_by_supergraphs, BRUTE_BREADTH_CAP, SUPERGRAPH_CAP};
pub use cover::{greedy_cover_radius, min_cover_radius};

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph};

/// Default limit on the order of graphs handed to all-pairs checks.
pub const DEFAULT_APSP_LIMIT: usize = 5000;

/// Hop distances between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x)
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Dist> + '_ {
        self.d[u * self.n..(u + 1) * self.n].iter().map(|&x| (x != UNREACHABLE).then_some(x))
    }

    pub fn diameter(&self) -> Dist {
        self.d.iter().try_fold(0, |acc, &x| (x != UNREACHABLE).then_some(acc.max(x)))
    }
}

pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    d.par_chunks_mut(n.max(1)).enumerate().for_each(|(u, row)| {
        for (v, x) in g.bfs_from(u).into_iter().enumerate() {
            row[v] = x.unwrap_or(UNREACHABLE);
        }
    });
    DistanceMatrix { n, d }
}

/// Exact ratio `num / den` in lowest terms, `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0, "zero denominator");
        let (mut a, mut b) = (num, den);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        Ratio { num: num / a, den: den / a }
    }

    pub fn value(self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (u64::from(self.num) * u64::from(other.den)).cmp(&(u64::from(other.num) * u64::from(self.den)))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Ratio", 3)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.serialize_field("value", &self.value())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurplusReport {
    pub max_surplus: u32,
    /// Lexicographically first pair attaining `max_surplus`.
    pub surplus_pair: Option<(usize, usize)>,
    pub max_stretch: Ratio,
    pub stretch_pair: Option<(usize, usize)>,
    pub pairs: u64,
    /// For tree collections: how many pairs each tree serves best (ties go
    /// to the lower index). Empty for a single subgraph.
    pub tree_coverage: Vec<u64>,
}

impl SurplusReport {
    fn empty(trees: usize) -> Self {
        SurplusReport {
            max_surplus: 0,
            surplus_pair: None,
            max_stretch: Ratio::ONE,
            stretch_pair: None,
            pairs: 0,
            tree_coverage: vec![0; trees],
        }
    }

    fn record(&mut self, x: usize, y: usize, dg: u32, dh: u32) {
        self.pairs += 1;
        let s = dh - dg;
        if s > self.max_surplus || self.surplus_pair.is_none() {
            self.max_surplus = s;
            self.surplus_pair = Some((x, y));
        }
        let st = Ratio::new(dh, dg);
        if st > self.max_stretch || self.stretch_pair.is_none() {
            self.max_stretch = st;
            self.stretch_pair = Some((x, y));
        }
    }

    /// Order-independent merge; ties keep the smaller pair.
    fn merge(mut self, other: Self) -> Self {
        fn wins<T: Ord>(a: (T, Option<(usize, usize)>), b: (T, Option<(usize, usize)>)) -> bool {
            match (a.1, b.1) {
                (None, _) => false,
                (Some(_), None) => true,
                (Some(pa), Some(pb)) => a.0 > b.0 || (a.0 == b.0 && pa < pb),
            }
        }
        if wins((other.max_surplus, other.surplus_pair), (self.max_surplus, self.surplus_pair)) {
            (self.max_surplus, self.surplus_pair) = (other.max_surplus, other.surplus_pair);
        }
        if wins((other.max_stretch, other.stretch_pair), (self.max_stretch, self.stretch_pair)) {
            (self.max_stretch, self.stretch_pair) = (other.max_stretch, other.stretch_pair);
        }
        self.pairs += other.pairs;
        for (a, b) in self.tree_coverage.iter_mut().zip(other.tree_coverage) {
            *a += b;
        }
        self
    }
}

fn check_subgraph(g: &Graph, h: &Graph) -> Result<()> {
    if h.n() != g.n() {
        return Err(Error::Contract(format!("subgraph has {} vertices, host has {}", h.n(), g.n())));
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::Contract(format!("edge ({u}, {v}) is not in the host graph")));
    }
    Ok(())
}

fn unspanned(x: usize, y: usize) -> Error {
    Error::Contract(format!("subgraph does not connect {x} and {y}"))
}

/// Worst additive surplus and multiplicative stretch of `h` over all pairs.
pub fn surplus(g: &Graph, h: &Graph) -> Result<SurplusReport> {
    check_subgraph(g, h)?;
    (0..g.n())
        .into_par_iter()
        .map(|x| {
            let (dg, dh) = (g.bfs_from(x), h.bfs_from(x));
            let mut rep = SurplusReport::empty(0);
            for y in x + 1..g.n() {
                let Some(a) = dg[y] else { continue };
                let b = dh[y].ok_or_else(|| unspanned(x, y))?;
                rep.record(x, y, a, b);
            }
            Ok(rep)
        })
        .try_reduce(|| SurplusReport::empty(0), |a, b| Ok(a.merge(b)))
}

/// Surplus where each pair uses its best tree.
pub fn collective_surplus(g: &Graph, trees: &[Graph]) -> Result<SurplusReport> {
    for (i, t) in trees.iter().enumerate() {
        check_subgraph(g, t)?;
        if !t.is_tree() {
            return Err(Error::Contract(format!("tree {i} is not a spanning tree")));
        }
    }
    if trees.is_empty() && g.n() > 1 {
        return Err(Error::Contract("empty tree collection".into()));
    }
    (0..g.n())
        .into_par_iter()
        .map(|x| {
            let dg = g.bfs_from(x);
            let dts: Vec<Vec<Dist>> = trees.iter().map(|t| t.bfs_from(x)).collect();
            let mut rep = SurplusReport::empty(trees.len());
            for y in x + 1..g.n() {
                let Some(a) = dg[y] else { continue };
                let (best_idx, best) = dts
                    .iter()
                    .enumerate()
                    .map(|(i, d)| (i, d[y].expect("spanning trees connect everything")))
                    .min_by_key(|&(i, d)| (d, i))
                    .ok_or_else(|| unspanned(x, y))?;
                rep.tree_coverage[best_idx] += 1;
                rep.record(x, y, a, best);
            }
            Ok(rep)
        })
        .try_reduce(|| SurplusReport::empty(trees.len()), |a, b| Ok(a.merge(b)))
}

/// Largest `d_h(u, v)` over edges `uv` of `g`; `None` if some edge is
/// disconnected in `h`.
pub fn max_edge_stretch(g: &Graph, h: &Graph) -> Result<Option<u32>> {
    check_subgraph(g, h)?;
    Ok(g.vertices()
        .into_par_iter()
        .map(|u| {
            let d = h.bfs_from(u);
            g.neighbors(u).iter().filter(|&&v| v > u).try_fold(1, |acc, &v| d[v].map(|x| acc.max(x)))
        })
        .try_reduce(|| 0, |a, b| Some(a.max(b))))
}

/// Fails with the first edge (in ascending order) of `g` whose endpoints
/// are more than `t` apart in `h`.
pub fn check_t_spanner(g: &Graph, h: &Graph, t: u32) -> Result<()> {
    check_subgraph(g, h)?;
    let bad = g
        .vertices()
        .into_par_iter()
        .filter_map(|u| {
            let d = h.bfs_from_iter(std::iter::once(u), Some(t));
            g.neighbors(u).iter().find(|&&v| v > u && d[v].is_none()).map(|&v| (u, v))
        })
        .min();
    match bad {
        None => Ok(()),
        Some((u, v)) => {
            let dist = h.bfs_from(u)[v].map_or("infinite".to_string(), |d| d.to_string());
            Err(Error::SpannerViolation { u, v, dist, stretch: t })
        }
    }
}
