//! Finite radial sums against truncated Laguerre and Jacobi series.

use monogenic::corollary::{JacobiSums, LaguerreSums};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lag = LaguerreSums::new(3, 1)?;
    for (x0, r) in [(0.0, 0.7), (0.4, 0.9), (-1.0, 1.8)] {
        let [i, ii] = lag.eval(x0, r, 30)?;
        println!("Laguerre ({x0:5.2}, {r:4.2}): {:.3e} {:.3e}", (i.lhs - i.rhs).abs(), (ii.lhs - ii.rhs).abs());
    }
    let jac = JacobiSums::new(3, 0, 1.5)?;
    println!("M = {}", jac.constant());
    for terms in [5, 10, 25] {
        let [i, ii] = jac.eval(0.2, 0.5, terms)?;
        println!("Jacobi, {terms:2} terms: {:.3e} {:.3e}", (i.lhs - i.rhs).abs(), (ii.lhs - ii.rhs).abs());
    }
    Ok(())
}
