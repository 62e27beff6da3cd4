//! The Hermite generating function in closed form against its CK series.

use monogenic::ckseries::ck_hermite_series;
use monogenic::fueter::{ft_transform, hermite_gf_closed};
use monogenic::grid::Grid;
use monogenic::mvpoly::monogenic_generators;
use monogenic::radial::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, k) in [(3, 0), (3, 2), (5, 1)] {
        let pk = monogenic_generators(m, k)?.elements()[0].clone();
        let closed = hermite_gf_closed(m, k, &pk)?;
        let series = ck_hermite_series(&pk, 30)?;
        let ft = ft_transform(&parse("exp(z^2)")?, &pk, m, k)?;
        let mut worst = 0.0f64;
        let mut ratio = None;
        for (x0, r) in Grid::new((-1.0, 1.0, 5), (0.2, 2.0, 5)).points() {
            let (a, b) = closed.eval_parts(x0, r)?;
            let (c, d) = series.eval_parts(x0, r)?;
            worst = worst.max((a - c).abs()).max((b - d).abs());
            ratio.get_or_insert(ft.eval_parts(x0, r)?.0 / a);
        }
        println!("m = {m}, k = {k}: closed vs series {worst:.1e}, Ft[exp(z^2)] / closed = {:.6}", ratio.unwrap());
    }
    let closed = hermite_gf_closed(3, 0, &monogenic::mvpoly::CliffordPolynomial::one(3))?;
    println!("\nA = {}", closed.scalar_expr().0);
    println!("B = {}", closed.vector_expr().0);
    Ok(())
}
