//! Writes a decomposition in PACE `.td` format, reads it back and validates it.
use spannerweave::graph::named::grid;
use spannerweave::treedec::{parse_pace, to_pace, validate, TreeDecomposition};

fn main() -> spannerweave::Result<()> {
    let g = grid(3, 3);
    let order: Vec<usize> = (0..9).collect();
    let td = TreeDecomposition::from_elimination_order(&g, &order)?;
    let text = to_pace(&td);
    print!("{text}");
    let back = parse_pace(&text)?;
    assert_eq!(back, td);
    println!("round trip ok, violations: {:?}", validate(&g, &back));
    Ok(())
}
