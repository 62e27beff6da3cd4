//! The Gegenbauer generating function on the unit ball, and where its series converges.

use monogenic::ckseries::ck_gegenbauer_series;
use monogenic::fueter::{gegenbauer_gf_closed, gegenbauer_reduction_constant};
use monogenic::mvpoly::CliffordPolynomial;
use monogenic::scalar::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = q(3, 2);
    let pk = CliffordPolynomial::one(3);
    let closed = gegenbauer_gf_closed(3, 0, &alpha, &pk)?;
    let series = ck_gegenbauer_series(&pk, 1.5, 25)?;
    println!("reduction constant = {}", gegenbauer_reduction_constant(&alpha, 3, 0)?);
    println!("at (0, 0.6): {:?}", closed.eval_parts(0.0, 0.6)?);

    // the x0-series has radius 1 - r: fine near the axis, divergent past it
    println!("\n   r    x0   closed A        series A        |diff|");
    for r in [0.2, 0.5, 0.8] {
        for x0 in [0.1, 0.3] {
            let (a, _) = closed.eval_parts(x0, r)?;
            let (s, _) = series.eval_parts(x0, r)?;
            println!("{r:4.1} {x0:5.1}   {a:<15.9} {s:<15.9} {:.1e}", (a - s).abs());
        }
    }
    Ok(())
}
