//! Cauchy-Kowalevski extension of an arbitrary polynomial in `x`.

use monogenic::ckseries::ck_generic;
use monogenic::clifford::Multivector;
use monogenic::mvpoly::CliffordPolynomial;
use monogenic::scalar::qi;

fn main() {
    let m = 3;
    // g(x) = x1^2 x2 + 3 x3 e12
    let mut g = CliffordPolynomial::zero(m);
    g.add_term(vec![2, 1, 0], Multivector::scalar(qi(1), m));
    g.add_term(vec![0, 0, 1], Multivector::blade(0b011, qi(3), m));
    let ck = ck_generic(&g);
    for (n, c) in ck.coefficients().iter().enumerate() {
        println!("x0^{n}: {c}");
    }
    println!("restricts to g: {}", ck.restriction() == &g);
    println!("monogenic: {}", ck.is_monogenic());
    println!("CK[g](0.5, (1, 2, -1)) = {}", ck.eval(0.5, &[1.0, 2.0, -1.0]));
}
