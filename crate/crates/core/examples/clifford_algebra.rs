//! Blades as bitmasks and the geometric product in R_{0,m}.

use monogenic::clifford::{blade_label, blade_product, BladeMask, Multivector};
use monogenic::scalar::qi;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = 3;
    let e12 = BladeMask::from_indices(&[1, 2], m)?;
    let e23 = BladeMask::from_indices(&[2, 3], m)?;
    let (sign, blade) = blade_product(e12, e23)?;
    println!("e12 e23 = {sign} {}", blade_label(blade.bits()));

    // every unit vector squares to -1
    for j in 1..=m {
        let e = Multivector::<f64>::generator(j, m);
        println!("e{j}^2 = {}", e.mul(&e));
    }

    // x^2 = -|x|^2 for a vector x
    let x = Multivector::vector(&[qi(1), qi(2), qi(-2)]);
    println!("x = {x}");
    println!("x^2 = {}", x.mul(&x));

    let a = Multivector::from_terms(m, [(0b000, 1.0), (0b011, 2.0)]);
    let b = Multivector::from_terms(m, [(0b101, -1.0), (0b111, 0.5)]);
    println!("({a}) ({b}) = {}", a.mul(&b));
    Ok(())
}
