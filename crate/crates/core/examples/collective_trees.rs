//! A few spanning trees that together approximate every distance additively.
use spannerweave::gen::{generate, Family};
use spannerweave::hierarchy::build_hierarchy;
use spannerweave::{spanners, verify};

fn main() -> spannerweave::Result<()> {
    let inst = generate(Family::PlantedTwSpanner { n: 80, k: 2, t: 3, extra: 80 }, 11)?;
    let g = &inst.graph;
    // tree-width 2 spanner, so bags are covered by three disks
    let h = build_hierarchy(g, 3)?;
    let system = spanners::collective_system(&h);
    let trees = system.tree_graphs(g)?;
    let report = verify::collective_surplus(g, &trees)?;
    println!("{} trees (bound {:.1})", trees.len(), spanners::tree_count_bound(g.n(), 3));
    println!("collective surplus {} (bound {:.1})", report.max_surplus, spanners::surplus_bound(&h));
    for (i, pairs) in report.tree_coverage.iter().enumerate() {
        println!("  tree {i} is best for {pairs} pairs");
    }
    Ok(())
}
