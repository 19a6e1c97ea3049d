//! Exact tree-breadth of small graphs, checked two independent ways.
use spannerweave::graph::named::{cycle, grid};
use spannerweave::verify::{brute_tree_breadth, tree_breadth_by_supergraphs};

fn main() -> spannerweave::Result<()> {
    for n in [4, 6, 9, 12, 15] {
        println!("C{n}: tree-breadth {}", brute_tree_breadth(&cycle(n), 1)?);
    }
    let g = grid(2, 3);
    for k in 1..=3 {
        let fast = brute_tree_breadth(&g, k)?;
        let slow = tree_breadth_by_supergraphs(&g, k)?;
        println!("2x3 grid, {k} disks per bag: {fast} (supergraph enumeration: {slow})");
    }
    Ok(())
}
