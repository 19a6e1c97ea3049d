//! Balanced disk separators.
//!
//! A vertex set `S` is *balanced* when every component of `G - S` has at
//! most `floor(n / 2)` vertices. This module finds balanced separators of
//! the form `D_r(v)` (one disk) and `D_r(v_1) ∪ ... ∪ D_r(v_k)` (k disks)
//! with minimum radius `r`.
//!
//! Tie-breaking is fixed: minimum radius first, then the smallest center
//! (or the lexicographically smallest sorted center tuple).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph, VertexSet};
use crate::unionfind::UnionFind;

/// Default upper limit on the number of disks a separator may use.
pub const DEFAULT_K_CAP: usize = 3;

/// A balanced separator made of `centers.len()` disks of equal radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSeparator {
    pub centers: Vec<usize>,
    pub radius: u32,
    pub cover: VertexSet,
    pub max_component: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparatorSummary {
    pub centers: Vec<usize>,
    pub radius: u32,
    pub cover_size: usize,
    pub max_component: usize,
}

impl DiskSeparator {
    /// Builds the separator for the given centers and radius, computing the
    /// cover and its largest residual component.
    pub fn new(g: &Graph, centers: Vec<usize>, radius: u32) -> Self {
        let cover = g.disk_of_set(centers.iter().copied(), radius);
        let max_component = g.max_component_size(cover.as_mask());
        DiskSeparator { centers, radius, cover, max_component }
    }

    pub fn is_balanced(&self, n: usize) -> bool {
        self.max_component <= n / 2
    }

    pub fn summary(&self) -> SeparatorSummary {
        SeparatorSummary {
            centers: self.centers.clone(),
            radius: self.radius,
            cover_size: self.cover.len(),
            max_component: self.max_component,
        }
    }
}

/// True when removing `cover` leaves no component above `floor(n / 2)`.
pub fn is_balanced(g: &Graph, cover: &VertexSet) -> bool {
    g.max_component_size(cover.as_mask()) <= g.n() / 2
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Contract("empty graph has no separator".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Minimum `r` such that `D_r(v)` is a balanced separator of the connected
/// graph `g`.
///
/// One BFS from `v` followed by a union-find sweep over the BFS layers from
/// the farthest inward: after all layers `> r` are merged, the largest set
/// is the largest component of `G - D_r(v)`.
pub fn min_radius_at(g: &Graph, v: usize) -> Result<u32> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    require_connected(g)?;
    Ok(layered_min_radius(g, v, g.n() / 2))
}

/// Layered sweep with an explicit balance threshold; `g` connected.
fn layered_min_radius(g: &Graph, v: usize, threshold: usize) -> u32 {
    Sweeper::new(g.n()).radius(g, &[v], threshold)
}

/// First `size` vertices in BFS order from `root`; always a connected set.
fn bfs_ball(g: &Graph, root: usize, size: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut head = 0;
    while order.len() < size && head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                if order.len() == size {
                    break;
                }
            }
        }
    }
    order
}

/// Connected vertex sets with more than `n / 2` vertices. Every balanced
/// separator must intersect each of them.
fn heavy_probe_sets(g: &Graph, count: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let size = n / 2 + 1;
    let mut roots: Vec<usize> = Vec::new();
    let mut nearest: Vec<u32> = vec![u32::MAX; n];
    let mut next = 0;
    for _ in 0..count.min(n) {
        roots.push(next);
        for (u, d) in g.bfs_from(next).into_iter().enumerate() {
            nearest[u] = nearest[u].min(d.unwrap_or(u32::MAX));
        }
        // farthest-point traversal; ties to the smallest id
        let (far, &d) = nearest.iter().enumerate().max_by_key(|&(u, &d)| (d, std::cmp::Reverse(u))).unwrap();
        if d == 0 {
            break;
        }
        next = far;
    }
    roots.into_iter().map(|r| bfs_ball(g, r, size)).collect()
}

/// Single-disk balanced separator with globally minimum radius, ties broken
/// by the smallest center id.
///
/// Radius 0 is settled for all vertices by one depth-first search. Larger
/// radii are tried from 1 up and candidates smallest id first. Each
/// candidate `u` gets its exact radius `r_u` from one sweep. Balanced
/// separators stay balanced when enlarged and `D_r(v)` lies inside
/// `D_{r + d(u,v)}(u)`, so `r_v >= r_u - d(u, v)`: every vertex closer
/// than `r_u - r` to `u` is ruled out at radius `r`. Centers that work are
/// never pruned, which keeps the result identical to the exhaustive scan.
pub fn best_disk_separator(g: &Graph) -> Result<DiskSeparator> {
    require_connected(g)?;
    let n = g.n();
    let half = n / 2;
    if let Some(v) = largest_piece_without_each(g).iter().position(|&c| c <= half) {
        return Ok(DiskSeparator::new(g, vec![v], 0));
    }
    let mut known: Vec<Option<u32>> = vec![None; n];
    let mut evaluated: Vec<usize> = Vec::new();
    let mut r = 1;
    loop {
        let mut pool = vec![true; n];
        for &u in &evaluated {
            let ru = known[u].unwrap();
            if ru > r {
                for v in g.disk(u, ru - r - 1).iter() {
                    pool[v] = false;
                }
            }
        }
        let mut next = 0;
        while let Some(v) = (next..n).find(|&u| pool[u]) {
            let rv = match known[v] {
                Some(x) => x,
                None => {
                    let x = layered_min_radius(g, v, half);
                    known[v] = Some(x);
                    evaluated.push(v);
                    x
                }
            };
            if rv <= r {
                return Ok(DiskSeparator::new(g, vec![v], r));
            }
            for w in g.disk(v, rv - r - 1).iter() {
                pool[w] = false;
            }
            next = v + 1;
        }
        r += 1;
    }
}

/// For every vertex `v`, the order of the largest component of `G - v`,
/// from one depth-first search over the connected graph `g`.
fn largest_piece_without_each(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut tin = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut size = vec![1; n];
    // per vertex: sizes of the subtrees cut off by removing it
    let mut cut_sum = vec![0; n];
    let mut cut_max = vec![0; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    tin[0] = 0;
    low[0] = 0;
    let mut clock = 1;
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(u).get(*next) {
            *next += 1;
            if tin[w] == usize::MAX {
                tin[w] = clock;
                low[w] = clock;
                clock += 1;
                stack.push((w, 0));
            } else {
                low[u] = low[u].min(tin[w]);
            }
            continue;
        }
        stack.pop();
        if let Some(&(p, _)) = stack.last() {
            size[p] += size[u];
            low[p] = low[p].min(low[u]);
            if low[u] >= tin[p] {
                cut_sum[p] += size[u];
                cut_max[p] = cut_max[p].max(size[u]);
            }
        }
    }
    (0..n).map(|v| cut_max[v].max(n - 1 - cut_sum[v])).collect()
}

/// Exhaustive single-disk search over every vertex; reference for
/// [`best_disk_separator`].
pub fn best_disk_separator_exhaustive(g: &Graph) -> Result<DiskSeparator> {
    require_connected(g)?;
    let half = g.n() / 2;
    let (radius, center) = (0..g.n())
        .map(|v| (layered_min_radius(g, v, half), v))
        .min()
        .unwrap();
    Ok(DiskSeparator::new(g, vec![center], radius))
}

/// Minimum `r` for which the given centers' radius-`r` disks form a balanced
/// separator, computed by attaching a dummy vertex to all centers and
/// running the single-center sweep from it.
pub fn subset_min_radius(g: &Graph, centers: &[usize]) -> Result<u32> {
    require_connected(g)?;
    let n = g.n();
    if centers.is_empty() {
        return Err(Error::Contract("need at least one center".into()));
    }
    if let Some(&bad) = centers.iter().find(|&&c| c >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let dummy = n;
    let mut edges = g.edges();
    edges.extend(centers.iter().map(|&c| (c, dummy)));
    let plus = Graph::from_edges(n + 1, edges)?;
    // components of (G + x) - D_{r+1}(x) are exactly those of G - D_r^k
    let r = layered_min_radius(&plus, dummy, n / 2);
    Ok(r.saturating_sub(1))
}

fn check_k(g: &Graph, k: usize, cap: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Contract("k must be at least 1".into()));
    }
    if k > cap {
        return Err(Error::Refused(format!(
            "k = {k} exceeds the configured cap of {cap}; the search enumerates n^k center tuples"
        )));
    }
    if k > g.n() {
        return Err(Error::Contract(format!("k = {k} exceeds the vertex count {}", g.n())));
    }
    Ok(())
}

/// Reference k-disk search: every sorted k-subset in lexicographic order,
/// each scored with [`subset_min_radius`]. Exponential in `k`; meant for
/// small graphs and cross-checks.
pub fn best_k_disk_separator_exhaustive(g: &Graph, k: usize) -> Result<DiskSeparator> {
    require_connected(g)?;
    check_k(g, k, usize::MAX)?;
    let mut best: Option<(u32, Vec<usize>)> = None;
    let mut tuple: Vec<usize> = (0..k).collect();
    loop {
        let r = subset_min_radius(g, &tuple)?;
        if best.as_ref().is_none_or(|(br, _)| r < *br) {
            best = Some((r, tuple.clone()));
            if r == 0 {
                break;
            }
        }
        if !next_combination(&mut tuple, g.n()) {
            break;
        }
    }
    let (r, centers) = best.expect("at least one subset");
    Ok(DiskSeparator::new(g, centers, r))
}

/// Advances a sorted tuple to the next k-combination of `0..n`.
pub(crate) fn next_combination(t: &mut [usize], n: usize) -> bool {
    let k = t.len();
    for i in (0..k).rev() {
        if t[i] < n - k + i {
            t[i] += 1;
            for j in i + 1..k {
                t[j] = t[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Balanced separator made of `k` disks (distinct centers) with minimum
/// radius; ties go to the lexicographically smallest sorted center tuple.
pub fn best_k_disk_separator(g: &Graph, k: usize) -> Result<DiskSeparator> {
    best_k_disk_separator_capped(g, k, DEFAULT_K_CAP)
}

pub fn best_k_disk_separator_capped(g: &Graph, k: usize, cap: usize) -> Result<DiskSeparator> {
    require_connected(g)?;
    check_k(g, k, cap)?;
    let (centers, radius) = k_disk_search(g, k);
    Ok(DiskSeparator::new(g, centers, radius))
}

fn k_disk_search(g: &Graph, k: usize) -> (Vec<usize>, u32) {
    if k == 1 {
        let sep = best_disk_separator(g).expect("connected");
        return (sep.centers, sep.radius);
    }
    // Adding a disk never hurts, so the (k-1)-disk radius is feasible and
    // feasibility is monotone in the radius: walk down until it fails.
    let upper = k_disk_search(g, k - 1).1;
    let mut search = TupleSearch::new(g, k);
    let mut best = None;
    for rho in (0..=upper).rev() {
        match search.first_at(rho) {
            Some(t) => best = Some((t, rho)),
            None => break,
        }
    }
    best.expect("the (k-1)-disk radius is feasible")
}

/// Largest tuple table kept for exclusion marks (bits).
const TUPLE_TABLE_LIMIT: u64 = 1 << 31;
/// Largest box of tuples marked after one evaluation.
const BOX_LIMIT: usize = 1 << 15;

/// Bit table over sorted k-subsets of `0..n`, indexed by the combinatorial
/// number system.
struct TupleTable {
    binom: Vec<Vec<u64>>,
    bits: Vec<u64>,
}

impl TupleTable {
    fn new(n: usize, k: usize) -> Option<Self> {
        let mut binom = vec![vec![0u64; k + 1]; n + 1];
        for x in 0..=n {
            binom[x][0] = 1;
            for j in 1..=k.min(x) {
                binom[x][j] = binom[x - 1][j - 1].saturating_add(if j < x { binom[x - 1][j] } else { 0 });
            }
        }
        let total = binom[n][k];
        (total <= TUPLE_TABLE_LIMIT).then(|| TupleTable { binom, bits: vec![0; total.div_ceil(64) as usize] })
    }

    fn index(&self, sorted: &[usize]) -> usize {
        sorted.iter().enumerate().map(|(i, &v)| self.binom[v][i + 1]).sum::<u64>() as usize
    }

    fn get(&self, sorted: &[usize]) -> bool {
        let i = self.index(sorted);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, sorted: &[usize]) {
        let i = self.index(sorted);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self) {
        self.bits.fill(0);
    }
}

/// Lexicographic search for a balanced k-disk separator of a given radius.
///
/// Every tuple that gets scored has its exact radius `R(T)` computed. If
/// `D_rho(T')` is balanced then so is `D_{rho + x}(T)` when every center of
/// `T'` is within `x` of the matching center of `T`, so all such `T'` with
/// `x < R(T) - rho` are ruled out in one go. Scores are kept across radii.
/// A tuple must also come within `rho` of 16 spread-out connected sets of
/// more than `n / 2` vertices, which every balanced separator meets.
struct TupleSearch<'a> {
    g: &'a Graph,
    k: usize,
    probes: Vec<Vec<Dist>>,
    hits: Vec<u64>,
    all_hits: u64,
    scored: Vec<(Vec<usize>, u32)>,
    table: Option<TupleTable>,
    sweeper: Sweeper,
    csr: Csr,
    /// Row-major all-pairs distances, when they fit in 16 bits.
    rows: Option<Vec<u16>>,
}

impl<'a> TupleSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let probes: Vec<Vec<Dist>> =
            heavy_probe_sets(g, 16).into_iter().map(|set| g.bfs_from_iter(set, None)).collect();
        let all_hits = if probes.is_empty() { 0 } else { u64::MAX >> (64 - probes.len()) };
        TupleSearch {
            g,
            k,
            probes,
            hits: vec![0; g.n()],
            all_hits,
            scored: Vec::new(),
            table: TupleTable::new(g.n(), k),
            sweeper: Sweeper::new(g.n()),
            csr: Csr::new(g),
            rows: distance_rows(g),
        }
    }

    fn first_at(&mut self, rho: u32) -> Option<Vec<usize>> {
        for (v, h) in self.hits.iter_mut().enumerate() {
            *h = self.probes.iter().enumerate().fold(0, |m, (i, d)| if d[v] <= Some(rho) { m | 1 << i } else { m });
        }
        if let Some(table) = &mut self.table {
            table.clear();
        }
        for i in 0..self.scored.len() {
            let (t, r) = std::mem::take(&mut self.scored[i]);
            self.exclude(&t, r, rho);
            self.scored[i] = (t, r);
        }
        let mut tuple = Vec::with_capacity(self.k);
        self.walk(&mut tuple, 0, rho)
    }

    fn walk(&mut self, tuple: &mut Vec<usize>, hit: u64, rho: u32) -> Option<Vec<usize>> {
        let n = self.g.n();
        let slots = self.k - tuple.len();
        let start = tuple.last().map_or(0, |&l| l + 1);
        for v in start..=n - slots {
            tuple.push(v);
            let hit_v = hit | self.hits[v];
            let found = if slots > 1 {
                self.walk(tuple, hit_v, rho)
            } else if hit_v == self.all_hits && !self.table.as_ref().is_some_and(|t| t.get(tuple)) {
                self.score(tuple, rho)
            } else {
                None
            };
            tuple.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn score(&mut self, tuple: &[usize], rho: u32) -> Option<Vec<usize>> {
        let half = self.g.n() / 2;
        let r = match &self.rows {
            Some(rows) => {
                self.sweeper.load_rows(rows, tuple);
                if self.sweeper.balanced_at(&self.csr, rho, half) {
                    // the exact radius is not needed below this level
                    self.scored.push((tuple.to_vec(), 0));
                    return Some(tuple.to_vec());
                }
                (rho + 1..).find(|&r| self.sweeper.balanced_at(&self.csr, r, half)).expect("full cover is balanced")
            }
            None => self.sweeper.radius(self.g, tuple, half),
        };
        self.scored.push((tuple.to_vec(), r));
        if r <= rho {
            return Some(tuple.to_vec());
        }
        self.exclude(tuple, r, rho);
        None
    }

    /// Marks every tuple ruled out by a scored tuple `t` of radius `r`.
    fn exclude(&mut self, t: &[usize], r: u32, rho: u32) {
        let Some(table) = &mut self.table else { return };
        if r <= rho {
            return;
        }
        table.set(t);
        let mut x = r - rho - 1;
        let mut balls: Vec<Vec<usize>> = Vec::new();
        while x > 0 {
            balls = t.iter().map(|&c| self.g.disk(c, x).to_vec()).collect();
            let size = balls.iter().try_fold(1usize, |acc, b| acc.checked_mul(b.len()));
            if size.is_some_and(|s| s <= BOX_LIMIT) {
                break;
            }
            x -= 1;
        }
        if x == 0 {
            return;
        }
        let mut pick = vec![0usize; t.len()];
        let mut sorted = vec![0usize; t.len()];
        loop {
            for (s, (ball, &i)) in sorted.iter_mut().zip(balls.iter().zip(&pick)) {
                *s = ball[i];
            }
            sorted.sort_unstable();
            if sorted.windows(2).all(|w| w[0] < w[1]) {
                table.set(&sorted);
            }
            // odometer over the product of balls
            let Some(i) = (0..pick.len()).rev().find(|&i| pick[i] + 1 < balls[i].len()) else { break };
            pick[i] += 1;
            for p in &mut pick[i + 1..] {
                *p = 0;
            }
        }
    }
}

/// Largest graph whose all-pairs table is kept by the tuple search.
const ROWS_LIMIT: usize = 8192;

fn distance_rows(g: &Graph) -> Option<Vec<u16>> {
    let n = g.n();
    if n > ROWS_LIMIT {
        return None;
    }
    let mut rows = vec![0u16; n * n];
    for (v, row) in rows.chunks_mut(n).enumerate() {
        for (x, d) in row.iter_mut().zip(g.bfs_from(v)) {
            *x = d.expect("connected") as u16;
        }
    }
    Some(rows)
}

/// Flat adjacency for the inner loops of the tuple search.
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    fn new(g: &Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut targets = Vec::with_capacity(2 * g.m());
        offsets.push(0);
        for v in 0..g.n() {
            targets.extend_from_slice(g.neighbors(v));
            offsets.push(targets.len());
        }
        Csr { offsets, targets }
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Reusable buffers for the layered sweep from a set of centers.
struct Sweeper {
    dist: Vec<u32>,
    order: Vec<usize>,
    uf: UnionFind,
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
}

impl Sweeper {
    fn new(n: usize) -> Self {
        Sweeper {
            dist: vec![u32::MAX; n],
            order: Vec::with_capacity(n),
            uf: UnionFind::new(n),
            mark: vec![0; n],
            stamp: 0,
            stack: Vec::new(),
        }
    }

    /// Minimum `r` such that no component of `G - D_r(centers)` exceeds
    /// `threshold`; `g` connected.
    fn radius(&mut self, g: &Graph, centers: &[usize], threshold: usize) -> u32 {
        let (dist, order) = (&mut self.dist, &mut self.order);
        dist.fill(u32::MAX);
        order.clear();
        for &c in centers {
            if dist[c] == u32::MAX {
                dist[c] = 0;
                order.push(c);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    order.push(w);
                }
            }
        }
        self.sweep(|v| g.neighbors(v), threshold)
    }

    /// Loads `min` over the rows of `centers` as the current distances.
    fn load_rows(&mut self, rows: &[u16], centers: &[usize]) {
        let n = self.dist.len();
        let (first, rest) = centers.split_first().expect("nonempty tuple");
        for (d, &x) in self.dist.iter_mut().zip(&rows[first * n..(first + 1) * n]) {
            *d = x as u32;
        }
        for &c in rest {
            for (d, &x) in self.dist.iter_mut().zip(&rows[c * n..(c + 1) * n]) {
                *d = (*d).min(x as u32);
            }
        }
    }

    /// Whether every component of the vertices beyond distance `r` has at
    /// most `threshold` vertices, by flooding until the answer is forced.
    fn balanced_at(&mut self, csr: &Csr, r: u32, threshold: usize) -> bool {
        let dist = &self.dist;
        let mut remaining = dist.iter().filter(|&&d| d > r).count();
        if remaining <= threshold {
            return true;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        for v in 0..dist.len() {
            if dist[v] <= r || self.mark[v] == stamp {
                continue;
            }
            self.mark[v] = stamp;
            self.stack.clear();
            self.stack.push(v);
            let mut size = 0;
            while let Some(u) = self.stack.pop() {
                size += 1;
                if size > threshold {
                    return false;
                }
                for &w in csr.neighbors(u) {
                    if dist[w] > r && self.mark[w] != stamp {
                        self.mark[w] = stamp;
                        self.stack.push(w);
                    }
                }
            }
            remaining -= size;
            if remaining <= threshold {
                return true;
            }
        }
        true
    }

    /// Walks `order` (sorted by `dist`) from the outermost layer inwards,
    /// joining each layer to what lies beyond it.
    fn sweep<'n>(&mut self, neighbors: impl Fn(usize) -> &'n [usize], threshold: usize) -> u32 {
        let (dist, order) = (&self.dist, &self.order);
        let n = order.len();
        self.uf.reset();
        let mut answer = dist[order[n - 1]];
        let mut max_comp = 0;
        let mut end = n;
        while end > 0 {
            let j = dist[order[end - 1]];
            if j == 0 {
                break;
            }
            let mut start = end;
            while start > 0 && dist[order[start - 1]] == j {
                start -= 1;
            }
            for &u in &order[start..end] {
                for &w in neighbors(u) {
                    if dist[w] >= j {
                        self.uf.union(u, w);
                    }
                }
                max_comp = max_comp.max(self.uf.set_size(u));
            }
            if max_comp > threshold {
                break;
            }
            answer = j - 1;
            end = start;
        }
        answer
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Brute force over every `(v, r)` with a direct component check.
    fn oracle_best(g: &Graph) -> (u32, usize) {
        let n = g.n();
        for r in 0..=n as u32 {
            for v in 0..n {
                if is_balanced(g, &g.disk(v, r)) {
                    return (r, v);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn per_center_examples() {
        assert_eq!(min_radius_at(&path(9), 4).unwrap(), 0);
        for v in 0..6 {
            assert_eq!(min_radius_at(&cycle(6), v).unwrap(), 1);
        }
        for v in 0..5 {
            assert_eq!(min_radius_at(&complete(5), v).unwrap(), 1);
        }
    }

    #[test]
    fn per_center_is_minimal() {
        let g = grid(4, 5);
        for v in g.vertices() {
            let r = min_radius_at(&g, v).unwrap();
            assert!(is_balanced(&g, &g.disk(v, r)));
            if r > 0 {
                assert!(!is_balanced(&g, &g.disk(v, r - 1)));
            }
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_radius_at(&g, 0), Err(Error::Disconnected));
        assert_eq!(best_disk_separator(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn best_single_disk_examples() {
        let s = best_disk_separator(&star(6)).unwrap();
        assert_eq!((s.centers.clone(), s.radius), (vec![0], 0));
        assert_eq!(best_disk_separator(&cycle(6)).unwrap().radius, 1);
        let g = grid(4, 4);
        let s = best_disk_separator(&g).unwrap();
        // exhaustive (v, r) scan: no single radius-1 disk balances the 4x4
        // grid (D_1(5) leaves a 10-vertex component); radius 2 at vertex 1
        assert_eq!(oracle_best(&g), (2, 1));
        assert_eq!((s.centers, s.radius), (vec![1], 2));
    }

    #[test]
    fn k_disk_examples() {
        let c12 = cycle(12);
        let s = best_k_disk_separator(&c12, 2).unwrap();
        // two radius-0 disks already cut C12 into arcs of at most 6
        assert_eq!(s.radius, 0);
        assert!(s.is_balanced(12));
        assert_eq!(s.centers, vec![0, 5]);
        assert_eq!(s, best_k_disk_separator_exhaustive(&c12, 2).unwrap());
        // antipodal radius-1 disks leave two 3-arcs
        assert_eq!(subset_min_radius(&c12, &[0, 6]).unwrap(), 0);
        assert_eq!(DiskSeparator::new(&c12, vec![0, 6], 1).max_component, 3);
        assert_eq!(best_k_disk_separator(&cycle(6), 1).unwrap().radius, 1);
    }

    #[test]
    fn two_cliques_joined_by_a_path() {
        // K5 on 0..5, K5 on 5..10, path 4 - 10 - 11 - 12 - 13 - 14 - 5
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in base..base + 5 {
                for v in u + 1..base + 5 {
                    edges.push((u, v));
                }
            }
        }
        let path = [4, 10, 11, 12, 13, 14, 5];
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        let g = Graph::from_edges(15, edges).unwrap();
        let s = best_k_disk_separator(&g, 2).unwrap();
        let reference = best_k_disk_separator_exhaustive(&g, 2).unwrap();
        assert_eq!(s, reference);
        // removing the two attachment vertices 4 and 5 leaves pieces of 4, 4, 5
        assert_eq!(s.radius, 0);
        assert!(s.is_balanced(15));
    }

    #[test]
    fn k_cap_and_range_errors() {
        assert!(matches!(best_k_disk_separator(&cycle(6), 4), Err(Error::Refused(_))));
        assert!(matches!(best_k_disk_separator_capped(&path(2), 3, 5), Err(Error::Contract(_))));
        assert!(best_k_disk_separator_capped(&cycle(8), 4, 4).is_ok());
    }

    #[test]
    fn dummy_vertex_radius_matches_direct_check() {
        let g = cycle(12);
        assert_eq!(subset_min_radius(&g, &[0, 6]).unwrap(), 0);
        assert_eq!(subset_min_radius(&g, &[0, 1]).unwrap(), 2);
        assert_eq!(subset_min_radius(&g, &[0]).unwrap(), min_radius_at(&g, 0).unwrap());
        let g = grid(3, 4);
        for a in 0..12 {
            for b in a + 1..12 {
                let r = subset_min_radius(&g, &[a, b]).unwrap();
                let cover = g.disk_of_set([a, b], r);
                assert!(is_balanced(&g, &cover));
                if r > 0 {
                    assert!(!is_balanced(&g, &g.disk_of_set([a, b], r - 1)));
                }
            }
        }
    }

    #[test]
    fn trivial_orders() {
        let g = Graph::empty(1);
        assert_eq!(best_disk_separator(&g).unwrap().radius, 0);
        assert_eq!(best_disk_separator(&path(2)).unwrap().radius, 0);
    }
}
