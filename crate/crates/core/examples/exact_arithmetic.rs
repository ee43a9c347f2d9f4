//! Exact rational functions in `z`, `w`, `lambda`: parsing, normalization,
//! gcds, substitution and derivatives.

use nevgraph::{poly_gcd, RatFun, Var};

fn main() -> nevgraph::Result<()> {
    let a: RatFun = "(z^2 - 1)/(z*w - w)".parse()?;
    println!("normalized:  {a}");

    let b: RatFun = "1/z + 1/w".parse()?;
    println!("sum:         {b}");
    println!("latex:       {}", b.to_latex());
    println!("json:        {}", serde_json::to_string(&b.to_json()).expect("serializes"));

    let g = poly_gcd(a.num(), &"z^2 + 2*z + 1".parse::<RatFun>()?.num().clone())?;
    println!("gcd:         {g}");

    let f: RatFun = "w/(1 - z*w)".parse()?;
    let minus_w = -RatFun::w();
    println!("f(-w, w):    {}", f.substitute(Var::Z, &minus_w)?);
    println!("df/dz:       {}", f.derivative(Var::Z));
    Ok(())
}
