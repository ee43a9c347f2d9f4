//! The star product glues two rooted graphs at their roots; reciprocal
//! transforms add, minus the shared root's diagonal entry.

use nevgraph::nevanlinna::{reciprocal_transform, verify_star_identity};
use nevgraph::{star_product, Color, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let square = ColoredGraph::new(vec![Z, W, W, W], [(1, 2), (2, 3), (3, 4), (4, 1)], 1)?;
    let triangle = ColoredGraph::new(vec![Z, Z, W], [(1, 2), (2, 3), (3, 1)], 1)?;

    let g_g = reciprocal_transform(&square, 1)?;
    let g_h = reciprocal_transform(&triangle, 1)?;
    println!("g_G         = {g_g}");
    println!("g_H         = {g_h}");
    println!("g_G + g_H   = {}", &g_g + &g_h);

    let product = star_product(&square, &triangle)?;
    println!("g_(G*H)     = {}", reciprocal_transform(&product, product.root())?);
    let report = verify_star_identity(&square, &triangle)?;
    println!("g_(G*H) = g_G + g_H + z: {}", report.equal);
    Ok(())
}
