//! Turns a narrow decomposition of a planted spanner into one of the host
//! graph and measures it.
use spannerweave::gen::{generate, Family};
use spannerweave::treedec::{bags_within_disks, lift, metrics, validate};

fn main() -> spannerweave::Result<()> {
    let t = 3;
    let inst = generate(Family::PlantedTwSpanner { n: 40, k: 1, t, extra: 30 }, 5)?;
    let g = &inst.graph;
    let h = inst.planted_spanner().expect("planted");
    let td = inst.certificate.decomposition.clone().expect("planted");
    let lifted = lift(g, &h, &td, t)?;
    let radius = t.div_ceil(2);
    println!("spanner decomposition: {} bags, width {}", td.num_bags(), td.width());
    println!("lifted: {} bags, width {}, valid {}", lifted.num_bags(), lifted.width(), validate(g, &lifted).is_empty());
    println!("every lifted bag inside {radius}-disks around its original bag: {}", bags_within_disks(g, &td, &lifted, radius));
    let m = metrics(g, &lifted, 2, true)?;
    println!("length {} breadth {} 2-breadth {} (exact: {})", m.length, m.breadth, m.k_breadth, m.k_breadth_exact);
    Ok(())
}
