//! Chordal graph recognition via maximum cardinality search.

use crate::graph::Graph;

/// Maximum cardinality search order (first visited first); ties go to the
/// smallest vertex id.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Perfect elimination ordering (each vertex's later neighbors form a
/// clique), or `None` if the graph is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = mcs_order(g);
    peo.reverse();
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(peo)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// Maximal cliques of a chordal graph (each sorted, list sorted), or
/// `None` if the graph is not chordal.
pub fn maximal_cliques(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let peo = perfect_elimination_order(g)?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        let inside = kept.iter().any(|big| c.iter().all(|x| big.binary_search(x).is_ok()));
        if !inside {
            kept.push(c);
        }
    }
    kept.sort();
    Some(kept)
}
