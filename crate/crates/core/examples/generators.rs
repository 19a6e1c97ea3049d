//! Seeded instance generators and their certificates.
use spannerweave::gen::{generate, verify_certificate, Family};

fn main() -> spannerweave::Result<()> {
    let families = [
        Family::Cycle { len: 9 },
        Family::Chordal { n: 30 },
        Family::Grid { rows: 4, cols: 5 },
        Family::Connected { n: 30, extra: 10 },
        Family::PlantedTreeSpanner { n: 30, t: 3, extra: 20 },
        Family::PlantedTwSpanner { n: 30, k: 2, t: 5, extra: 20 },
    ];
    for family in families {
        let inst = generate(family, 42)?;
        verify_certificate(&inst.graph, &inst.certificate)?;
        println!(
            "{family:?}: n={} m={} tree-breadth={:?} breadth bound={:?}",
            inst.graph.n(),
            inst.graph.m(),
            inst.certificate.tree_breadth,
            inst.certificate.breadth_upper
        );
    }
    Ok(())
}
