use super::DistanceMatrix;

/// Largest set accepted by [`min_cover_radius`].
pub const MAX_COVER_SET: usize = 64;

fn masks_at(d: &DistanceMatrix, set: &[usize], r: u32) -> Vec<u64> {
    let mut masks: Vec<u64> = (0..d.n())
        .map(|c| {
            set.iter()
                .enumerate()
                .filter(|&(_, &x)| d.get(c, x).is_some_and(|dx| dx <= r))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .filter(|&m| m != 0)
        .collect();
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&big| m & !big == 0) {
            kept.push(m);
        }
    }
    kept
}

fn coverable(masks: &[u64], uncovered: u64, k: usize) -> bool {
    if uncovered == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let low = uncovered & uncovered.wrapping_neg();
    masks.iter().filter(|&&m| m & low != 0).any(|&m| coverable(masks, uncovered & !m, k - 1))
}

/// Smallest `r` such that `set` lies in the union of `k` radius-`r` disks
/// centered anywhere in the graph. `None` if no radius works (the set spans
/// more than `k` components).
pub fn min_cover_radius(d: &DistanceMatrix, set: &[usize], k: usize) -> Option<u32> {
    assert!(set.len() <= MAX_COVER_SET, "cover sets are limited to {MAX_COVER_SET} vertices");
    if set.len() <= k {
        return Some(0);
    }
    let full = if set.len() == 64 { u64::MAX } else { (1u64 << set.len()) - 1 };
    let upper = greedy_cover_radius(d, set, k)?;
    (0..upper).find(|&r| coverable(&masks_at(d, set, r), full, k)).or(Some(upper))
}

/// Farthest-first upper bound on [`min_cover_radius`], within a factor
/// of two of the optimum.
pub fn greedy_cover_radius(d: &DistanceMatrix, set: &[usize], k: usize) -> Option<u32> {
    if set.len() <= k {
        return Some(0);
    }
    let mut near: Vec<Option<u32>> = set.iter().map(|&x| d.get(set[0], x)).collect();
    for _ in 1..k {
        let far = (0..set.len()).max_by_key(|&i| near[i].map_or(u64::MAX, u64::from))?;
        for (i, &x) in set.iter().enumerate() {
            near[i] = match (near[i], d.get(set[far], x)) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
    }
    near.into_iter().try_fold(0, |acc, x| x.map(|x| acc.max(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::verify::apsp;

    #[test]
    fn cycle_covers() {
        let d = apsp(&cycle(6));
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(min_cover_radius(&d, &all, 1), Some(3));
        assert_eq!(min_cover_radius(&d, &all, 2), Some(1));
        assert_eq!(min_cover_radius(&d, &all, 3), Some(1));
        assert_eq!(min_cover_radius(&d, &all, 6), Some(0));
        assert_eq!(min_cover_radius(&d, &[0, 2, 4], 1), Some(2));
        assert_eq!(min_cover_radius(&d, &[0, 2], 1), Some(1));
    }

    #[test]
    fn centers_outside_the_set() {
        let d = apsp(&star(4));
        assert_eq!(min_cover_radius(&d, &[1, 2, 3, 4], 1), Some(1));
        assert_eq!(greedy_cover_radius(&d, &[1, 2, 3, 4], 1), Some(2));
    }

    #[test]
    fn split_sets() {
        let g = crate::Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = apsp(&g);
        assert_eq!(min_cover_radius(&d, &[0, 1, 2, 3], 1), None);
        assert_eq!(min_cover_radius(&d, &[0, 1, 2, 3], 2), Some(1));
    }
}
