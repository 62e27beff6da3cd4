//! Classical one-variable polynomials and combinatorial scalars.
//!
//! The recurrences are generic over the coefficient field `F` and over the
//! argument type `A`, so the same code evaluates `L_n^{(a)}(t)` at a double,
//! at a complex number, or symbolically at a polynomial such as `|x|^2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{factorial, Coefficient, Q};

/// A unital algebra over `F`: the argument type of the recurrences.
pub trait Algebra<F: Coefficient>: Clone {
    /// The constant `c` embedded next to `self` (same dimension/shape).
    fn constant_like(&self, c: F) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &F) -> Self;
}

impl<F: Coefficient> Algebra<F> for F {
    fn constant_like(&self, c: F) -> Self {
        c
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn sub(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn scale(&self, c: &F) -> Self {
        self.clone() * c.clone()
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Coefficient> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// The identity polynomial `t`.
    pub fn variable() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> F {
        self.coeffs.get(j).cloned().unwrap_or_else(F::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c.clone() * F::from_i64(j as i64)).collect())
    }

    /// Horner evaluation at any algebra element.
    pub fn eval_at<A: Algebra<F>>(&self, t: &A) -> A {
        let mut acc = t.constant_like(F::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(&t.constant_like(c.clone()));
        }
        acc
    }

    pub fn map<G: Coefficient>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Coefficient> Algebra<F> for UPoly<F> {
    fn constant_like(&self, c: F) -> Self {
        UPoly::constant(c)
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UPoly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
    fn scale(&self, c: &F) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

fn int<F: Coefficient>(v: i64) -> F {
    F::from_i64(v)
}

/// Generalized Laguerre polynomial `L_n^{(alpha)}(t)`.
pub fn laguerre<F: Coefficient, A: Algebra<F>>(n: usize, alpha: &F, t: &A) -> A {
    let one = t.constant_like(F::one());
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = t.constant_like(F::one() + alpha.clone()).sub(t);
    for j in 1..n {
        // (j+1) L_{j+1} = (2j+1+a-t) L_j - (j+a) L_{j-1}
        let jf = int::<F>(j as i64);
        let lin = t.constant_like(int::<F>(2 * j as i64 + 1) + alpha.clone()).sub(t);
        let next = lin.mul(&cur).sub(&prev.scale(&(jf + alpha.clone())));
        let next = next.scale(&(F::one() / int::<F>(j as i64 + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial `P_n^{(a,b)}(t)`.
///
/// Uses the three-term recurrence; when one of its denominators vanishes for
/// the given parameters (possible for negative `a + b`), switches to the
/// explicit binomial sum, which is valid for all parameters.
pub fn jacobi<F: Coefficient, A: Algebra<F>>(n: usize, a: &F, b: &F, t: &A) -> A {
    let one = t.constant_like(F::one());
    if n == 0 {
        return one;
    }
    let ab = a.clone() + b.clone();
    let degenerate = (1..n).any(|j| {
        let j = int::<F>(j as i64);
        (j.clone() + ab.clone() + F::one()).is_zero() || (int::<F>(2) * j + ab.clone()).is_zero()
    });
    if degenerate {
        return jacobi_sum(n, a, b, t);
    }
    let half = F::one() / int::<F>(2);
    // P_1 = (a+1) + (a+b+2)(t-1)/2
    let tm1 = t.sub(&one);
    let mut prev = one;
    let mut cur = tm1.scale(&((ab.clone() + int::<F>(2)) * half)).add(&t.constant_like(a.clone() + F::one()));
    for j in 1..n {
        let jf = int::<F>(j as i64);
        let s = int::<F>(2) * jf.clone() + ab.clone();
        let denom = int::<F>(2) * (jf.clone() + F::one()) * (jf.clone() + ab.clone() + F::one()) * s.clone();
        let c1 = (s.clone() + F::one()) * (s.clone() + int::<F>(2)) * s.clone();
        let c0 = (s.clone() + F::one()) * (a.clone() * a.clone() - b.clone() * b.clone());
        let c2 = int::<F>(2) * (jf.clone() + a.clone()) * (jf + b.clone()) * (s + int::<F>(2));
        let next = t.scale(&c1).add(&t.constant_like(c0)).mul(&cur).sub(&prev.scale(&c2));
        let next = next.scale(&(F::one() / denom));
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_n^{(a,b)}(t) = sum_s C(n+a, n-s) C(n+b, s) ((t-1)/2)^s ((t+1)/2)^{n-s}`.
///
/// Both factors stay below 1 in size on `[-1, 1]`, so the terms do not blow
/// up the way the one-sided expansion in `(t-1)/2` does near `t = -1`.
pub fn jacobi_sum<F: Coefficient, A: Algebra<F>>(n: usize, a: &F, b: &F, t: &A) -> A {
    let one = t.constant_like(F::one());
    let half = F::one() / int::<F>(2);
    let wm = t.sub(&one).scale(&half);
    let wp = t.add(&one).scale(&half);
    let mut minus = vec![one.clone()];
    let mut plus = vec![one];
    for s in 1..=n {
        minus.push(minus[s - 1].mul(&wm));
        plus.push(plus[s - 1].mul(&wp));
    }
    let na = int::<F>(n as i64) + a.clone();
    let nb = int::<F>(n as i64) + b.clone();
    let mut acc = t.constant_like(F::zero());
    for s in 0..=n {
        let c = gen_binomial(&na, n - s) * gen_binomial(&nb, s);
        acc = acc.add(&minus[s].mul(&plus[n - s]).scale(&c));
    }
    acc
}

/// Gegenbauer polynomial `C_n^{(lambda)}(t)`.
pub fn gegenbauer<F: Coefficient, A: Algebra<F>>(n: usize, lambda: &F, t: &A) -> A {
    let one = t.constant_like(F::one());
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = t.scale(&(int::<F>(2) * lambda.clone()));
    for j in 1..n {
        // (j+1) C_{j+1} = 2(j+l) t C_j - (j+2l-1) C_{j-1}
        let jf = int::<F>(j as i64);
        let next = t
            .mul(&cur)
            .scale(&(int::<F>(2) * (jf.clone() + lambda.clone())))
            .sub(&prev.scale(&(jf + int::<F>(2) * lambda.clone() - F::one())));
        let next = next.scale(&(F::one() / int::<F>(j as i64 + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients of the Bessel polynomial `y_n(x) = sum_j (n+j)! / ((n-j)! j! 2^j) x^j`,
/// lowest degree first.
pub fn bessel_poly_coeffs(n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|j| {
            let num = factorial((n + j) as u64);
            let den = factorial((n - j) as u64) * factorial(j as u64) * (BigInt::one() << j);
            num / den
        })
        .collect()
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer<F: Coefficient>(a: &F, n: usize) -> F {
    (0..n).fold(F::one(), |acc, j| acc * (a.clone() + int::<F>(j as i64)))
}

/// `n!!` for `n >= -1`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial undefined for {n}");
    let mut acc = BigInt::one();
    let mut j = n;
    while j > 1 {
        acc *= BigInt::from(j);
        j -= 2;
    }
    acc
}

/// Generalized binomial coefficient `(1/n!) prod_{j<n} (alpha - j)`.
pub fn gen_binomial<F: Coefficient>(alpha: &F, n: usize) -> F {
    let prod = (0..n).fold(F::one(), |acc, j| acc * (alpha.clone() - int::<F>(j as i64)));
    prod / F::from_q(&Q::from_integer(factorial(n as u64)))
}

/// Integer binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `floor(n / 2)` for possibly negative `n`.
pub fn floor_half(n: i64) -> i64 {
    n.div_euclid(2)
}

/// Sign `(-1)^n`.
pub fn minus_one_pow(n: i64) -> i64 {
    if n.abs() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn upoly(c: &[Q]) -> UPoly<Q> {
        UPoly::new(c.to_vec())
    }

    #[test]
    fn laguerre_seeds() {
        let t = UPoly::<Q>::variable();
        let a = q(3, 7);
        assert_eq!(laguerre(0, &a, &t), upoly(&[qi(1)]));
        assert_eq!(laguerre(1, &a, &t), upoly(&[a.clone() + qi(1), qi(-1)]));
        // L_2^{(a)}(t) = ((a+1)(a+2) - 2(a+2)t + t^2) / 2
        let l2 = upoly(&[(a.clone() + qi(1)) * (a.clone() + qi(2)) / qi(2), -(a.clone() + qi(2)), q(1, 2)]);
        assert_eq!(laguerre(2, &a, &t), l2);
    }

    #[test]
    fn jacobi_seed_and_fallback_agree() {
        let t = UPoly::<Q>::variable();
        let (a, b) = (q(1, 2), q(5, 3));
        let p1 = jacobi(1, &a, &b, &t);
        let expect = upoly(&[a.clone() + qi(1) - (a.clone() + b.clone() + qi(2)) / qi(2), (a.clone() + b.clone() + qi(2)) / qi(2)]);
        assert_eq!(p1, expect);
        for n in 0..8 {
            assert_eq!(jacobi(n, &a, &b, &t), jacobi_sum(n, &a, &b, &t), "n={n}");
        }
    }

    #[test]
    fn jacobi_degenerate_parameters_use_sum() {
        // a + b = -2 makes 2j + a + b vanish at j = 1
        let t = UPoly::<Q>::variable();
        let (a, b) = (q(1, 2), q(-5, 2));
        let p = jacobi(3, &a, &b, &t);
        assert_eq!(p, jacobi_sum(3, &a, &b, &t));
        // the recurrence would divide by zero here; the numeric path must agree too
        let num: f64 = jacobi(3, &0.5, &-2.5, &0.3);
        assert!((num - p.map(crate::scalar::q_to_f64).eval_at(&0.3)).abs() < 1e-14);
    }

    #[test]
    fn gegenbauer_seeds() {
        let t = UPoly::<Q>::variable();
        let l = q(3, 4);
        assert_eq!(gegenbauer(0, &l, &t), upoly(&[qi(1)]));
        assert_eq!(gegenbauer(1, &l, &t), upoly(&[qi(0), qi(2) * l.clone()]));
        let c2 = upoly(&[-l.clone(), qi(0), qi(2) * l.clone() * (l.clone() + qi(1))]);
        assert_eq!(gegenbauer(2, &l, &t), c2);
    }

    #[test]
    fn bessel_coefficients() {
        let as_i64 = |n| bessel_poly_coeffs(n).into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(0), vec![1]);
        assert_eq!(as_i64(1), vec![1, 1]);
        assert_eq!(as_i64(2), vec![1, 3, 3]);
        assert_eq!(as_i64(3), vec![1, 6, 15, 15]);
    }

    #[test]
    fn combinatorial_scalars() {
        assert_eq!(pochhammer(&q(2, 3), 0), qi(1));
        assert_eq!(pochhammer(&qi(3), 4), qi(3 * 4 * 5 * 6));
        assert_eq!(double_factorial(5), BigInt::from(15));
        assert_eq!(double_factorial(0), BigInt::from(1));
        assert_eq!(double_factorial(-1), BigInt::from(1));
        assert_eq!(double_factorial(8), BigInt::from(384));
        assert_eq!(gen_binomial(&q(1, 2), 2), q(-1, 8));
        for a in 0..10i64 {
            for n in 0..=a as usize {
                assert_eq!(gen_binomial(&qi(a), n), Q::from_integer(binomial(a as u64, n as u64)));
            }
        }
        assert_eq!(floor_half(-3), -2);
        assert_eq!(minus_one_pow(-3), -1);
    }

    #[test]
    fn numeric_and_exact_paths_agree() {
        let a = q(1, 2);
        let t = UPoly::<Q>::variable();
        for n in 0..10 {
            let exact = laguerre(n, &a, &t).map(crate::scalar::q_to_f64);
            let at = 1.37;
            let num = laguerre(n, &0.5, &at);
            let via_poly = exact.eval_at(&at);
            assert!((num - via_poly).abs() < 1e-12 * (1.0 + num.abs()), "n={n}");
        }
    }
}
