//! The expression language for functions of `x0` and `r`: parse, differentiate, evaluate.

use monogenic::radial::{parse, Var};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse("exp(x0^2 - r^2) * cos(2*x0*r)")?;
    println!("f        = {f}");
    let fr = f.diff(Var::R);
    println!("df/dr    = {fr}");
    println!("f(0.3, 0.7)     = {}", f.eval(0.3, 0.7)?);
    println!("df/dr(0.3, 0.7) = {}", fr.eval(0.3, 0.7)?);

    // z = x0 + i r; complex powers take the principal branch
    let h = parse("(1 + z^2)^(1.5)")?;
    println!("h(0.2, 0.5)     = {}", h.eval(0.2, 0.5)?);
    println!("d3h/dx0^3 size  = {}", h.diff_n(Var::X0, 3).size());

    for bad in ["exp(", "x0 + y", "2 *"] {
        println!("{bad:>8} -> {}", parse(bad).unwrap_err());
    }
    Ok(())
}
