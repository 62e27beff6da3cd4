//! Clifford-Gegenbauer polynomials from `D_alpha = 2(alpha+1)x - (1-|x|^2)D`.

use monogenic::fueter::gegenbauer_gf_closed;
use monogenic::mvpoly::{explicit_gegenbauer, gegenbauer_operator, monogenic_generators};
use monogenic::scalar::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, k) = (5, 1);
    let pk = monogenic_generators(m, k)?.elements()[0].clone();
    for alpha in [q(-1, 2), q(1, 2), q(3, 1)] {
        for n in 0..=4 {
            let lhs = gegenbauer_operator(n, &alpha, &pk)?;
            let rhs = explicit_gegenbauer(n, m, k, &alpha)?.mul(&pk);
            println!("alpha = {alpha:>4}, n = {n}: {:>3} terms, match = {}", lhs.len(), lhs == rhs);
        }
    }
    // the generating function excludes alpha in {-1, ..., -k-(m-1)/2}
    println!("{}", gegenbauer_gf_closed(m, k, &q(-2, 1), &pk).map(|_| ()).unwrap_err());
    Ok(())
}
