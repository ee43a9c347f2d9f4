//! Inverse entries survive Schur complement reduction, so a representing
//! function can be computed through any chain of eliminations.

use nevgraph::nevanlinna::representing_function_via_schur;
use nevgraph::{representing_function, schur_reduce, Color, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let g = ColoredGraph::new(vec![Z, W, Z, Z, Z], [(1, 3), (1, 4), (2, 3), (4, 5), (5, 2)], 1)?;

    let reduced = schur_reduce(&g.colored_adjacency(), &[0, 1])?;
    println!("2x2 reduction onto vertices 1 and 2:");
    for row in reduced.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    let direct = representing_function(&g, 1)?;
    let chained = representing_function_via_schur(&g, 1, &[vec![1, 2, 3], vec![1, 2], vec![1]])?;
    println!("direct  = {direct}");
    println!("chained = {chained}");
    println!("equal: {}", direct == chained);
    Ok(())
}
