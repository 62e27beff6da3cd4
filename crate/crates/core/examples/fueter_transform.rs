//! The Fueter transform of holomorphic inputs, and its closed form on monomials.

use monogenic::fueter::{ft_monomial, ft_transform, MonomialKind};
use monogenic::mvpoly::monogenic_generators;
use monogenic::radial::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, k) = (3, 1);
    let pk = monogenic_generators(m, k)?.elements()[0].clone();

    let f = ft_transform(&parse("exp(z^2)")?, &pk, m, k)?;
    let (a, a_part) = f.scalar_expr();
    println!("A = {a_part:?} part of {a}");
    let x = [0.3, -0.2, 0.5];
    println!("Ft[exp(z^2)](0.1, x) = {}", f.eval(0.1, &x)?);

    // on the hyperplane x0 = 0 the transforms of z^n, i z^n, z^-n, i z^-n are explicit
    let pn = pk.to_numeric();
    for kind in MonomialKind::ALL {
        for n in [2, 5] {
            let image = ft_monomial(n, kind, m, k)?;
            let direct = ft_transform(&kind.expression(n), &pk, m, k)?.eval(0.0, &x)?;
            let err = direct.sub(&image.eval(&x, &pn)).max_norm();
            println!("{kind:?} n = {n}: constant {}, error {err:.1e}", image.constant);
        }
    }
    Ok(())
}
