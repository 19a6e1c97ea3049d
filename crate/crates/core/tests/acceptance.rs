//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with
//! its wall-clock budget. Exits nonzero if any line fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spannerweave::gen::{generate, verify_certificate, Family, Instance};
use spannerweave::graph::{named, Graph};
use spannerweave::hierarchy::build_hierarchy;
use spannerweave::separators::best_disk_separator;
use spannerweave::spanners::{collective_system, sparse_spanner};
use spannerweave::treedec::{self, bags_within_disks, lift, metrics};
use spannerweave::verify::{brute_tree_breadth, collective_surplus, surplus};
use spannerweave::Error;

use common::Sample;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn log2(n: usize) -> f64 {
    (n as f64).log2()
}

fn half_up(t: u32) -> u32 {
    t.div_ceil(2)
}

fn oracle_fidelity() -> Outcome {
    ensure!(brute_tree_breadth(&named::cycle(6), 1).unwrap() == 2, "C6 is not 2");
    ensure!(brute_tree_breadth(&named::cycle(9), 1).unwrap() == 3, "C9 is not 3");
    for seed in 0..50 {
        let n = 2 + seed as usize % 6;
        let g = generate(Family::Chordal { n }, seed).unwrap().graph;
        let tb = brute_tree_breadth(&g, 1).unwrap();
        ensure!(tb == 1, "chordal n={n} seed {seed} has tree-breadth {tb}");
    }
    Ok("C6=2, C9=3, 50 chordal graphs (n 2..=7) all 1".into())
}

fn chordal_separators() -> Outcome {
    let mut nodes = 0;
    for seed in 0..50u64 {
        let n = 4 * (seed as usize + 1);
        let g = generate(Family::Chordal { n }, 100 + seed).unwrap().graph;
        let r = best_disk_separator(&g).unwrap().radius;
        ensure!(r <= 1, "chordal n={n} needs radius {r}");
        let h = build_hierarchy(&g, 1).unwrap();
        nodes += h.nodes.len();
        ensure!(h.max_radius() <= 1, "chordal n={n} hierarchy reaches radius {}", h.max_radius());
    }
    Ok(format!("50 chordal graphs (n 4..=200), {nodes} hierarchy nodes, all radii <= 1"))
}

/// Orders log-spaced from 16 to 1024.
fn depth_orders() -> Vec<usize> {
    (0..100).map(|i| (16.0 * 64f64.powf(i as f64 / 99.0)).round() as usize).collect()
}

/// Largest order on which the three-disk hierarchy is run.
const THREE_DISK_LIMIT: usize = 360;

fn depth_bounds() -> Outcome {
    let mut runs = [0; 3];
    for (i, n) in depth_orders().into_iter().enumerate() {
        let g = generate(Family::Connected { n, extra: n / 4 }, 200 + i as u64).unwrap().graph;
        for k in 1..=3 {
            if k == 3 && n > THREE_DISK_LIMIT {
                continue;
            }
            let depth = build_hierarchy(&g, k).unwrap().depth() as f64;
            let bound = if k == 1 { log2(n) - 1.0 } else { log2(n) };
            ensure!(depth <= bound, "n={n} k={k}: depth {depth} > {bound:.2}");
            runs[k - 1] += 1;
        }
    }
    Ok(format!(
        "100 connected graphs (n 16..=1024, m ~ 1.25n): k=1 on {}, k=2 on {}, k=3 on {} (n <= {THREE_DISK_LIMIT})",
        runs[0], runs[1], runs[2]
    ))
}

fn tree_spanner_instances() -> Vec<(usize, u32, Instance)> {
    let mut out = Vec::new();
    for (i, &n) in [200, 700, 2000].iter().enumerate() {
        for t in [3, 5, 7] {
            let inst = generate(Family::PlantedTreeSpanner { n, t, extra: n }, 300 + i as u64).unwrap();
            verify_certificate(&inst.graph, &inst.certificate).unwrap();
            out.push((n, t, inst));
        }
    }
    out
}

fn sparse_spanners(instances: &[(usize, u32, Instance)]) -> Outcome {
    let mut worst = 0.0f64;
    for (n, t, inst) in instances {
        let (n, rho) = (*n, half_up(*t));
        let h = build_hierarchy(&inst.graph, 1).unwrap();
        ensure!(h.max_radius() <= rho, "n={n} t={t}: r_max {} > {rho}", h.max_radius());
        let sparse = sparse_spanner(&h);
        let edges = sparse.num_edges() as f64;
        ensure!(edges <= n as f64 * log2(n), "n={n} t={t}: {edges} edges");
        let union = &sparse.tree_graphs(&inst.graph).unwrap()[0];
        let s = f64::from(surplus(&inst.graph, union).unwrap().max_surplus);
        let bound = 2.0 * f64::from(rho) * log2(n) - 1.0;
        ensure!(s <= bound, "n={n} t={t}: surplus {s} > {bound:.2}");
        worst = worst.max(s / bound);
    }
    Ok(format!("{} planted instances (n 200..=2000, t 3/5/7), worst surplus/bound {worst:.2}", instances.len()))
}

fn collective_systems(instances: &[(usize, u32, Instance)]) -> Outcome {
    let mut worst = 0.0f64;
    for (n, t, inst) in instances {
        let (n, rho) = (*n, half_up(*t));
        let h = build_hierarchy(&inst.graph, 1).unwrap();
        let system = collective_system(&h);
        let trees = system.tree_graphs(&inst.graph).unwrap();
        ensure!(trees.len() <= log2(n).floor() as usize, "n={n} t={t}: {} trees", trees.len());
        ensure!(trees.iter().all(Graph::is_tree), "n={n} t={t}: a member is not a spanning tree");
        let s = f64::from(collective_surplus(&inst.graph, &trees).unwrap().max_surplus);
        let bound = 2.0 * f64::from(rho) * log2(n);
        ensure!(s <= bound, "n={n} t={t}: collective surplus {s} > {bound:.2}");
        worst = worst.max(s / bound);
    }
    Ok(format!("{} planted instances, worst surplus/bound {worst:.2}", instances.len()))
}

fn tw_spanner_instances() -> Vec<(usize, usize, u32, Instance)> {
    let mut out = Vec::new();
    for (i, &n) in [40, 150, 500].iter().enumerate() {
        for k in [1, 2] {
            for t in [3, 5] {
                let inst = generate(Family::PlantedTwSpanner { n, k, t, extra: n }, 400 + i as u64).unwrap();
                verify_certificate(&inst.graph, &inst.certificate).unwrap();
                out.push((n, k, t, inst));
            }
        }
    }
    out
}

fn tw_systems(instances: &[(usize, usize, u32, Instance)]) -> Outcome {
    for (n, k, t, inst) in instances {
        let (n, disks, rho) = (*n, k + 1, half_up(*t));
        let h = build_hierarchy(&inst.graph, disks).unwrap();
        ensure!(h.max_radius() <= rho, "n={n} k={k} t={t}: radius {} > {rho}", h.max_radius());
        let trees = collective_system(&h).tree_graphs(&inst.graph).unwrap();
        let tree_bound = disks as f64 * (1.0 + log2(n));
        ensure!(trees.len() as f64 <= tree_bound, "n={n} k={k} t={t}: {} trees", trees.len());
        let s = f64::from(collective_surplus(&inst.graph, &trees).unwrap().max_surplus);
        let bound = 2.0 * f64::from(rho) * (1.0 + log2(n));
        ensure!(s <= bound, "n={n} k={k} t={t}: collective surplus {s} > {bound:.2}");
    }
    Ok(format!("{} planted instances (n 40/150/500, k 1/2, t 3/5), built with k+1 disks", instances.len()))
}

fn lifted_decompositions(instances: &[(usize, usize, u32, Instance)]) -> Outcome {
    let mut exact = 0;
    for (n, k, t, inst) in instances {
        let rho = half_up(*t);
        let spanner = inst.planted_spanner().unwrap();
        let td = inst.certificate.decomposition.as_ref().unwrap();
        let lifted = lift(&inst.graph, &spanner, td, *t).unwrap();
        ensure!(treedec::is_valid(&inst.graph, &lifted), "n={n} k={k} t={t}: lift is invalid");
        // each original bag has at most k + 1 vertices, so the lifted bag is
        // covered by k + 1 disks of radius rho around them
        ensure!(td.width() <= *k, "n={n} k={k}: planted width {}", td.width());
        ensure!(bags_within_disks(&inst.graph, td, &lifted, rho), "n={n} k={k} t={t}: bag leaves its disks");
        match metrics(&inst.graph, &lifted, k + 1, false) {
            Ok(m) => {
                ensure!(m.k_breadth <= rho, "n={n} k={k} t={t}: exact breadth {}", m.k_breadth);
                exact += 1;
            }
            Err(Error::Refused(_)) => {}
            Err(e) => return Err(format!("n={n} k={k} t={t}: {e}")),
        }
    }
    Ok(format!("{} lifts valid with disk witness; exact (k+1)-breadth computed on {exact} within caps", instances.len()))
}

fn antipodal_trees() -> Outcome {
    for len in [12, 9] {
        let g = named::cycle(len);
        let half = len / 2;
        let without = |a: usize, b: usize| {
            let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (a, b)).collect();
            g.edge_subgraph(&edges).unwrap()
        };
        let trees = [without(0, 1), without(half, half + 1)];
        let s = collective_surplus(&g, &trees).unwrap().max_surplus;
        ensure!(s == 0, "C{len}: collective surplus {s}");
    }
    Ok("C12 and C9 both 0".into())
}

const PROPERTY_INSTANCES: usize = 1000;

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..PROPERTY_INSTANCES {
        let s = Sample::random(&mut rng, 2, 8, 0.3);
        let k = rng.gen_range(1..=2);
        let keep: Vec<bool> = s.extra.iter().map(|_| rng.gen_bool(0.5)).collect();
        let h = s.subgraph(&keep);
        let small = if s.g.n() <= 7 { common::tree_breadth_survives_contraction(&s.g) } else { Ok(()) };
        common::separator_matches_brute_force(&s.g)
            .and(small)
            .and(common::ancestor_bags_cut_every_path(&s.g, k))
            .and(common::shallow_ancestors_keep_distances(&s.g, k))
            .and(common::edge_stretch_bounds_all_pairs(&s.g, &h))
            .and(common::stretch_at_most_surplus_plus_one(&s.g, &h))
            .map_err(|e| format!("instance {i} ({:?}): {e}", s.g.edges()))?;
    }
    Ok(format!("{PROPERTY_INSTANCES} random connected graphs (n 2..=8), six property families"))
}

/// Fastest of nine runs of the k=1 pipeline.
fn pipeline_time(g: &Graph) -> Duration {
    (0..9)
        .map(|_| {
            let start = Instant::now();
            let h = build_hierarchy(g, 1).unwrap();
            std::hint::black_box((sparse_spanner(&h), collective_system(&h)));
            start.elapsed()
        })
        .min()
        .unwrap()
}

/// Growth factor per doubling of `n` from 250 to 2000: least-squares slope of
/// log time against log n, with times summed over three seeds.
fn growth_per_doubling(family: impl Fn(usize) -> Family) -> (f64, Vec<Duration>) {
    let times: Vec<Duration> = [250, 500, 1000, 2000]
        .iter()
        .map(|&n| (0..3).map(|seed| pipeline_time(&generate(family(n), 500 + seed).unwrap().graph)).sum())
        .collect();
    let logs: Vec<f64> = times.iter().map(|t| t.as_secs_f64().log2()).collect();
    let mean = logs.iter().sum::<f64>() / 4.0;
    // doublings sit at x = -1.5, -0.5, 0.5, 1.5
    let slope = logs.iter().enumerate().map(|(i, y)| (i as f64 - 1.5) * (y - mean)).sum::<f64>() / 5.0;
    let growth = slope.exp2();
    (growth, times)
}

fn scaling() -> Outcome {
    let show = |times: &[Duration]| times.iter().map(|t| format!("{:.1}", t.as_secs_f64() * 1e3)).collect::<Vec<_>>().join("/");
    let (planted, planted_times) = growth_per_doubling(|n| Family::PlantedTreeSpanner { n, t: 3, extra: n });
    let (random, random_times) = growth_per_doubling(|n| Family::Connected { n, extra: n });
    let detail = format!(
        "planted tree-spanner graphs (m = 2n) grow {planted:.2}x per doubling ({} ms); \
         random connected graphs (m = 2n), not gated, grow {random:.2}x ({} ms)",
        show(&planted_times),
        show(&random_times)
    );
    ensure!(planted <= 2.5, "{detail}");
    Ok(detail)
}

fn main() {
    let mut all_pass = true;
    let mut report = |name: &str, budget: Duration, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        all_pass &= pass;
        println!(
            "{} {name} [{:.1}s of {}s]: {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    };
    let secs = Duration::from_secs;
    report("1 tree-breadth oracle", secs(60), &mut oracle_fidelity);
    report("2 chordal separators", secs(30), &mut chordal_separators);
    report("3 hierarchy depth", secs(120), &mut depth_bounds);
    let trees = tree_spanner_instances();
    report("4 sparse spanners", secs(300), &mut || sparse_spanners(&trees));
    report("5 collective tree systems", secs(300), &mut || collective_systems(&trees));
    let tw = tw_spanner_instances();
    report("6 bounded tree-width spanners", secs(600), &mut || tw_systems(&tw));
    report("7 lifted decompositions", secs(300), &mut || lifted_decompositions(&tw));
    report("8 antipodal deletion trees", secs(1), &mut antipodal_trees);
    report("9 property suites", secs(600), &mut property_suites);
    report("scaling of the k=1 pipeline", secs(120), &mut scaling);
    if !all_pass {
        std::process::exit(1);
    }
}
