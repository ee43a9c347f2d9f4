//! Contact order at `(inf, 0)`: the level curves `f = lambda` are expanded
//! at `z = inf` and the first `lambda`-dependent power of `1/z` is twice the
//! distance from the root to the `w` vertex.

use nevgraph::laurent::contact_truncation;
use nevgraph::{expand_at_infinity, level_curve, root_function, verify_contact_theorem, Color, ColoredGraph};

fn main() -> nevgraph::Result<()> {
    use Color::{W, Z};
    let g = ColoredGraph::new(vec![Z, W, Z, Z, Z], [(1, 3), (1, 4), (2, 3), (4, 5), (5, 2)], 1)?;
    let f = root_function(&g)?;
    let curve = level_curve(&f)?;
    println!("f_G      = {f}");
    println!("Lambda   = {}", curve.lambda_fn);
    println!("f(z, Lambda) = {}", curve.back_substitute(&f)?);
    println!("series   = {}", expand_at_infinity(&curve.lambda_fn, contact_truncation(&f)));

    let report = verify_contact_theorem(&g)?;
    println!("{}", serde_json::to_string(&report).expect("serializes"));

    for root in 1..=g.len() {
        let r = verify_contact_theorem(&g.with_root(root)?)?;
        println!("root {root}: order {} distance {}", r.order, r.distance);
    }
    Ok(())
}
