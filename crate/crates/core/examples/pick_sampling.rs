//! Numeric sampling of the Pick property (`Im f >= 0` on the upper
//! bi-half-plane) and the inner property (`f` real at real points) for
//! random `{z, w}`-colored graphs.

use nevgraph::{pick_property_sample, random};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nevgraph::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [2, 4, 6, 8] {
        let g = random::zw_graph(&mut rng, n);
        let report = pick_property_sample(&g, 1000, n as u64)?;
        println!("{n} vertices: {}", serde_json::to_string(&report).expect("serializes"));
    }
    Ok(())
}
