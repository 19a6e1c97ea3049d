//! Recursive separator hierarchy of a random graph, printed level by level.
use spannerweave::gen::{generate, Family};
use spannerweave::hierarchy::build_hierarchy;

fn main() -> spannerweave::Result<()> {
    let inst = generate(Family::Connected { n: 60, extra: 30 }, 7)?;
    let h = build_hierarchy(&inst.graph, 1)?;
    println!("n = {}, depth {}, largest radius {}", inst.graph.n(), h.depth(), h.max_radius());
    for node in &h.nodes {
        println!(
            "{:indent$}#{} {:?} r={} bag={:?}",
            "",
            node.id,
            node.kind,
            node.radius,
            node.bag_original_ids(),
            indent = 2 * node.depth
        );
    }
    Ok(())
}
