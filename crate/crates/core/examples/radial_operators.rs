//! The radial operators `D_r = (1/r) d/dr` and `D^r = d/dr (1/r)`: closed forms,
//! coefficient tables and the Bessel connection.

use monogenic::classical::bessel_poly_coeffs;
use monogenic::radial::{d_r_closed, d_r_compose, d_r_upper_closed, d_r_upper_compose, parse, RadialCoeffTable, RadialKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let t = RadialCoeffTable::closed(RadialKind::Lower, n);
        let row: Vec<String> = t.entries.values().map(|c| c.to_string()).collect();
        println!("a_(j,{n}) = [{}]", row.join(", "));
    }
    println!("y_4 coefficients: {:?}", bessel_poly_coeffs(4));

    let f = parse("sin(x0*r) * exp(-r^2)")?;
    for n in 0..=4 {
        let (x0, r) = (0.4, 1.3);
        let lower = (d_r_closed(n, &f).eval(x0, r)? - d_r_compose(n, &f).eval(x0, r)?).norm();
        let upper = (d_r_upper_closed(n, &f).eval(x0, r)? - d_r_upper_compose(n, &f).eval(x0, r)?).norm();
        println!("n = {n}: |closed - composed| = {lower:.1e} (D_r), {upper:.1e} (D^r)");
    }
    Ok(())
}
