//! Smallest-radius balanced disk separators with one and with two centers.
use spannerweave::graph::named::{cycle, grid};
use spannerweave::separators::{best_disk_separator, best_k_disk_separator};

fn main() -> spannerweave::Result<()> {
    let g = grid(6, 6);
    let one = best_disk_separator(&g)?;
    println!("grid 6x6, one disk: center {:?} radius {} largest piece {}", one.centers, one.radius, one.max_component);

    let ring = cycle(20);
    for k in 1..=2 {
        let sep = best_k_disk_separator(&ring, k)?;
        println!("C20, {k} disk(s): centers {:?} radius {} largest piece {}", sep.centers, sep.radius, sep.max_component);
    }
    Ok(())
}
