//! Laguerre, Jacobi and Gegenbauer polynomials and their generating functions.

use monogenic::classical::{gegenbauer, jacobi, laguerre};
use monogenic::suites::{jacobi_generating_function, laguerre_generating_function};

fn main() {
    let (a, b, x, t): (f64, f64, f64, f64) = (0.7, 1.3, 0.4, 0.35);
    for n in 0..5 {
        println!(
            "n = {n}: L = {:>10.6}  P = {:>10.6}  C = {:>10.6}",
            laguerre(n, &a, &x),
            jacobi(n, &a, &b, &x),
            gegenbauer(n, &a, &x)
        );
    }
    let lag: f64 = (0..200).map(|n| t.powi(n) * laguerre(n as usize, &a, &x)).sum();
    let jac: f64 = (0..200).map(|n| t.powi(n) * jacobi(n as usize, &a, &b, &x)).sum();
    println!("sum t^n L_n = {lag:.15}, closed {:.15}", laguerre_generating_function(a, x, t));
    println!("sum t^n P_n = {jac:.15}, closed {:.15}", jacobi_generating_function(a, b, x, t));

    // exact coefficients come for free with rational arguments
    let half = monogenic::scalar::q(1, 2);
    let p = laguerre(3, &half, &monogenic::classical::UPoly::variable());
    println!("L_3^(1/2)(t) coefficients: {:?}", p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
}
