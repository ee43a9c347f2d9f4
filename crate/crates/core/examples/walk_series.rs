//! Walk generating functions: `(A - zI)^{-1}_{(i,j)}` expanded at
//! `z = inf` counts walks, and its order of vanishing is the distance plus one.

use nevgraph::{walk_generating_series, Color, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    let cycle = ColoredGraph::new(vec![Color::Z; 5], [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], 1)?;
    for j in 1..=3 {
        let s = walk_generating_series(&cycle, 1, j, 8)?;
        println!("W_1{j} = {s}");
        println!("      order {} (distance {})", s.first_nonzero_order()?, cycle.distance(1, j).unwrap_or(0));
    }
    Ok(())
}
