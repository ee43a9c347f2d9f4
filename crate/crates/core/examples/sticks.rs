//! Determinants of `z`-colored paths, derived by elimination, by the
//! three-term recurrence and from the generating function `1/(1 + zx + x^2)`.

use nevgraph::sticks::{stick_by_determinant, stick_by_series};
use nevgraph::stick_determinants;

fn main() {
    let family = stick_determinants(8);
    print!("{}", family.table());
    println!("three derivations agree: {}", family.agree);
    println!("T_5 by elimination: {}", stick_by_determinant(5));
    println!("T_5 from the series: {}", stick_by_series(5)[5]);
}
