//! Representing functions `f_G^k = (A_G^-1)_{(k,k)}` of a colored graph,
//! with a numeric cross-check against an LU solve.

use nevgraph::numcheck::{eval_complex, resolvent_oracle};
use nevgraph::{representing_function, Color, ColoredGraph};
use num_complex::Complex64;

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let g = ColoredGraph::new(
        vec![Z, W, Z, Z, Z, W],
        [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
        1,
    )?;
    let (z, w) = (Complex64::new(0.0, 1.0), Complex64::new(0.0, 2.0));
    for k in 1..=g.len() {
        let f = representing_function(&g, k)?;
        let exact = eval_complex(&f, z, w, Complex64::new(0.0, 0.0))?;
        let numeric = resolvent_oracle(&g, k, z, w)?;
        println!("f^{k} = {f}");
        println!("      at (i, 2i): {exact:.6}  (LU: {numeric:.6})");
    }
    Ok(())
}
