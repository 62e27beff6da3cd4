//! Spherical monogenics: right-module generators and the full real basis.

use monogenic::mvpoly::{monogenic_basis, monogenic_generators};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, k) in [(3, 1), (3, 2), (5, 2), (7, 3)] {
        let gens = monogenic_generators(m, k)?;
        println!("m = {m}, k = {k}: {} generators, real dimension {}", gens.len(), gens.real_dimension());
    }

    let basis = monogenic_basis(3, 1)?;
    println!("\nreal basis of degree-1 monogenics in R^3 ({} elements):", basis.len());
    for p in basis.elements().iter().take(4) {
        println!("  {p}    D p = {}", p.dirac());
    }

    for p in monogenic_generators(3, 2)?.elements() {
        println!("generator {p}");
    }
    Ok(())
}
