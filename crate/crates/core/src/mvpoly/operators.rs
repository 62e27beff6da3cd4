use num_traits::One;

use super::{norm_squared, require_monogenic, vector_variable, CliffordPolynomial};
use crate::classical::{jacobi, laguerre, pochhammer};
use crate::error::Result;
use crate::scalar::{factorial, q, qi, Q};

/// `D_+ p = 2 x p - dirac(p)`.
pub fn apply_d_plus(p: &CliffordPolynomial) -> CliffordPolynomial {
    let x = vector_variable(p.dim()).expect("polynomial has a valid dimension");
    x.mul(p).scale(&qi(2)).sub(&p.dirac())
}

/// `D_alpha p = 2 (alpha + 1) x p - (1 - |x|^2) dirac(p)`.
pub fn apply_d_alpha(p: &CliffordPolynomial, alpha: &Q) -> CliffordPolynomial {
    let m = p.dim();
    let x = vector_variable(m).expect("polynomial has a valid dimension");
    let weight = CliffordPolynomial::one(m).sub(&norm_squared(m).expect("valid dimension"));
    x.mul(p).scale(&(qi(2) * (alpha + Q::one()))).sub(&weight.mul(&p.dirac()))
}

/// Clifford-Hermite polynomial `H_{n,m}(P_k) = D_+^n P_k`.
pub fn hermite_operator(n: usize, pk: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    require_monogenic(pk)?;
    Ok((0..n).fold(pk.clone(), |acc, _| apply_d_plus(&acc)))
}

/// Clifford-Gegenbauer polynomial `C^{(alpha)}_{n,m}(P_k) = D_alpha D_{alpha+1} ... D_{alpha+n-1} P_k`.
///
/// The rightmost factor `D_{alpha+n-1}` acts first.
pub fn gegenbauer_operator(n: usize, alpha: &Q, pk: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    require_monogenic(pk)?;
    Ok((0..n).rev().fold(pk.clone(), |acc, j| apply_d_alpha(&acc, &(alpha + qi(j as i64)))))
}

/// Radial factor `H_{n,m,k}(x)` through generalized Laguerre polynomials in `|x|^2`.
pub fn explicit_hermite(n: usize, m: usize, k: usize) -> Result<CliffordPolynomial> {
    let r2 = norm_squared(m)?;
    let half = n / 2;
    let pow2 = Q::from_integer(num_bigint::BigInt::one() << n);
    let scale = pow2 * Q::from_integer(factorial(half as u64));
    if n.is_multiple_of(2) {
        let alpha = qi(k as i64) + q(m as i64, 2) - qi(1);
        Ok(laguerre(half, &alpha, &r2).scale(&scale))
    } else {
        let alpha = qi(k as i64) + q(m as i64, 2);
        Ok(vector_variable(m)?.mul(&laguerre(half, &alpha, &r2)).scale(&scale))
    }
}

/// Radial factor `C^{(alpha)}_{n,m,k}(x)` through Jacobi polynomials in `1 - 2|x|^2`.
pub fn explicit_gegenbauer(n: usize, m: usize, k: usize, alpha: &Q) -> Result<CliffordPolynomial> {
    let t = CliffordPolynomial::one(m).sub(&norm_squared(m)?.scale(&qi(2)));
    let half = n / 2;
    let pow2 = Q::from_integer(num_bigint::BigInt::one() << n);
    let base = pow2 * Q::from_integer(factorial(half as u64));
    let shifted = alpha + qi(half as i64 + 1);
    if n.is_multiple_of(2) {
        let a = qi(k as i64) + q(m as i64, 2) - qi(1);
        let scale = base * pochhammer(&shifted, half);
        Ok(jacobi(half, &a, alpha, &t).scale(&scale))
    } else {
        let a = qi(k as i64) + q(m as i64, 2);
        let scale = base * pochhammer(&shifted, half + 1);
        Ok(vector_variable(m)?.mul(&jacobi(half, &a, alpha, &t)).scale(&scale))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Multivector;
    use crate::error::Error;

    fn x(m: usize) -> CliffordPolynomial {
        vector_variable(m).unwrap()
    }

    fn r2(m: usize) -> CliffordPolynomial {
        norm_squared(m).unwrap()
    }

    fn monogenic_degree_one(m: usize) -> CliffordPolynomial {
        // x1 e2 + x2 e1
        CliffordPolynomial::coordinate(1, m)
            .left_mul_constant(&Multivector::generator(2, m))
            .add(&CliffordPolynomial::coordinate(2, m).left_mul_constant(&Multivector::generator(1, m)))
    }

    #[test]
    fn d_plus_basics() {
        let m = 3;
        let one = CliffordPolynomial::one(m);
        assert_eq!(apply_d_plus(&one), x(m).scale(&qi(2)));
        // D_+(2x) = 4x^2 - 2 dirac(x) = -4|x|^2 + 2m
        let expect = one.scale(&qi(2 * m as i64)).sub(&r2(m).scale(&qi(4)));
        assert_eq!(apply_d_plus(&x(m).scale(&qi(2))), expect);
        let p = monogenic_degree_one(m);
        assert_eq!(apply_d_plus(&p), x(m).mul(&p).scale(&qi(2)));
    }

    #[test]
    fn d_alpha_basics() {
        let m = 3;
        let a = q(1, 3);
        let one = CliffordPolynomial::one(m);
        assert_eq!(apply_d_alpha(&one, &a), x(m).scale(&(qi(2) * (a.clone() + qi(1)))));
        let p = monogenic_degree_one(m);
        assert_eq!(apply_d_alpha(&p, &a), x(m).mul(&p).scale(&(qi(2) * (a + qi(1)))));
    }

    #[test]
    fn hermite_small_orders() {
        let m = 3;
        let one = CliffordPolynomial::one(m);
        assert_eq!(hermite_operator(0, &one).unwrap(), one);
        assert_eq!(hermite_operator(1, &one).unwrap(), x(m).scale(&qi(2)));
        let h2 = one.scale(&qi(6)).sub(&r2(m).scale(&qi(4)));
        assert_eq!(hermite_operator(2, &one).unwrap(), h2);
        assert_eq!(explicit_hermite(2, 3, 0).unwrap(), h2);
        assert_eq!(explicit_hermite(0, 3, 0).unwrap(), one);
        assert_eq!(explicit_hermite(1, 5, 2).unwrap(), x(5).scale(&qi(2)));
    }

    #[test]
    fn gegenbauer_small_orders() {
        let m = 3;
        let a = qi(1);
        let one = CliffordPolynomial::one(m);
        assert_eq!(gegenbauer_operator(0, &a, &one).unwrap(), one);
        assert_eq!(gegenbauer_operator(1, &a, &one).unwrap(), x(m).scale(&qi(4)));
        // D_1 D_2 1 evaluated by hand: 2m(a+2) - (a+2)(4a+4+2m)|x|^2 with a = 1
        let expect = one.scale(&qi(18)).sub(&r2(m).scale(&qi(42)));
        assert_eq!(gegenbauer_operator(2, &a, &one).unwrap(), expect);
        assert_eq!(explicit_gegenbauer(2, m, 0, &a).unwrap(), expect);
        let chain = apply_d_alpha(&apply_d_alpha(&one, &qi(2)), &a);
        assert_eq!(chain, expect);
        assert_eq!(explicit_gegenbauer(1, m, 0, &q(1, 2)).unwrap(), x(m).scale(&qi(3)));
    }

    #[test]
    fn gegenbauer_degree_one_seed() {
        let m = 3;
        let a = q(1, 2);
        let p = monogenic_degree_one(m);
        let lhs = gegenbauer_operator(2, &a, &p).unwrap();
        let rhs = explicit_gegenbauer(2, m, 1, &a).unwrap().mul(&p);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn operators_reject_non_monogenic_input() {
        let m = 3;
        let p = CliffordPolynomial::coordinate(1, m);
        assert_eq!(hermite_operator(2, &p), Err(Error::NotMonogenic));
        assert_eq!(gegenbauer_operator(2, &qi(1), &p), Err(Error::NotMonogenic));
    }
}
