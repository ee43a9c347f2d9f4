//! Retracting a pendant subgraph into a recolored cut vertex leaves the
//! representing function at the root unchanged.

use nevgraph::graph::pendant;
use nevgraph::nevanlinna::{reciprocal_transform, verify_retract_identity};
use nevgraph::{retract, root_function, Color, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let g = ColoredGraph::new(
        vec![Z, W, Z, Z, Z, W],
        [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
        1,
    )?;
    let k = pendant(&g, 4, &[5, 6])?;
    println!("g_K        = {}", reciprocal_transform(&k, k.root())?);

    let reduced = retract(&g, 4, &[5, 6])?;
    println!("reduced    = {}", reduced.to_json_string());
    println!("f_G        = {}", root_function(&g)?);
    println!("f_reduced  = {}", root_function(&reduced)?);
    println!("identical: {}", verify_retract_identity(&g, 4, &[5, 6])?.equal);
    Ok(())
}
