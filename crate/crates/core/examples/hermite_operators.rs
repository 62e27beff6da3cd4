//! Clifford-Hermite polynomials: repeated `D_+ = 2x - D` against the explicit Laguerre form.

use monogenic::mvpoly::{apply_d_plus, explicit_hermite, monogenic_generators};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, k) = (3, 1);
    let pk = monogenic_generators(m, k)?.elements()[0].clone();
    println!("P_k = {pk}");
    let mut h = pk.clone();
    for n in 0..=5 {
        let explicit = explicit_hermite(n, m, k)?.mul(&pk);
        println!("n = {n}: {} terms, equal to explicit form: {}", h.len(), h == explicit);
        h = apply_d_plus(&h);
    }
    println!("\nH_3 P_k = {}", explicit_hermite(3, m, k)?.mul(&pk));
    Ok(())
}
