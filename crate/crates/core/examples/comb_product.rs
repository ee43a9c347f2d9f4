//! The z-comb product hangs a copy of `H` from every `z` vertex of `G`;
//! its representing function is `f_G` with `z` replaced by `-g_H`.

use nevgraph::nevanlinna::{reciprocal_transform, verify_comb_identity};
use nevgraph::{comb_product_z, root_function, Color, ColoredGraph, RatFun, Var};

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let g = ColoredGraph::new(vec![W, Z, Z, Z], [(1, 2), (2, 3), (3, 4), (4, 1)], 1)?;
    let h = ColoredGraph::new(vec![Z, Z, W], [(1, 2), (2, 3), (3, 1)], 1)?;

    let comb = comb_product_z(&g, &h)?;
    println!("comb has {} vertices, w vertices {:?}", comb.len(), comb.w_vertices());

    let f_g = root_function(&g)?;
    let s: RatFun = -reciprocal_transform(&h, 1)?;
    println!("f_G          = {f_g}");
    println!("-g_H         = {s}");
    println!("f_G(-g_H, w) = {}", f_g.substitute(Var::Z, &s)?);
    println!("f_comb       = {}", root_function(&comb)?);
    println!("identity holds: {}", verify_comb_identity(&g, &h)?.equal);
    Ok(())
}
