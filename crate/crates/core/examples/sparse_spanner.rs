//! Sparse additive spanner of a graph that hides a tree 5-spanner.
use spannerweave::gen::{generate, Family};
use spannerweave::hierarchy::build_hierarchy;
use spannerweave::{spanners, verify};

fn main() -> spannerweave::Result<()> {
    let inst = generate(Family::PlantedTreeSpanner { n: 400, t: 5, extra: 400 }, 3)?;
    let g = &inst.graph;
    let h = build_hierarchy(g, 1)?;
    let system = spanners::sparse_spanner(&h);
    let spanner = g.edge_subgraph(&system.trees[0].edges)?;
    let report = verify::surplus(g, &spanner)?;
    println!("graph: {} vertices, {} edges", g.n(), g.m());
    println!("spanner: {} edges (bound {:.0})", spanner.m(), spanners::edge_bound(g.n(), 1));
    println!("surplus {} (bound {:.1}), stretch {}", report.max_surplus, spanners::surplus_bound(&h), report.max_stretch);
    Ok(())
}
