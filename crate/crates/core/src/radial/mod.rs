//! Expressions in `(x0, r)` and the radial operators
//! `D_r(n) = (r^{-1} d/dr)^n` and `D^r(n) = (d/dr r^{-1})^n`.

mod expr;
mod parse;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;

pub use expr::{complex_pow, Expression, Node, Var};
pub use parse::parse;

use crate::classical::{binomial, minus_one_pow};
use crate::error::{Error, Result};
use crate::scalar::{factorial, q_to_f64, Q};

fn r_inv() -> Expression {
    Expression::r().powf(-1.0)
}

/// `D_r(n)[e]` by composing `r^{-1} d/dr` n times.
pub fn d_r_compose(n: usize, e: &Expression) -> Expression {
    (0..n).fold(e.clone(), |acc, _| r_inv() * acc.diff(Var::R))
}

/// `D^r(n)[e]` by composing `d/dr r^{-1}` n times.
pub fn d_r_upper_compose(n: usize, e: &Expression) -> Expression {
    (0..n).fold(e.clone(), |acc, _| (r_inv() * acc).diff(Var::R))
}

/// `a_{j,n} = (-1)^{n+j} (2n-j-1)! / (2^{n-j} (n-j)! (j-1)!)`, `1 <= j <= n`.
pub fn a_coeff(j: usize, n: usize) -> Result<Q> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange(format!("a_{{{j},{n}}} needs 1 <= j <= n")));
    }
    let num = factorial((2 * n - j - 1) as u64) * BigInt::from(minus_one_pow((n + j) as i64));
    let den = (BigInt::from(1) << (n - j)) * factorial((n - j) as u64) * factorial((j - 1) as u64);
    Ok(Q::new(num, den))
}

/// `b_{j,n} = a_{j+1,n+1} = (-1)^{n+j} (2n-j)! / (2^{n-j} (n-j)! j!)`, `0 <= j <= n`.
pub fn b_coeff(j: usize, n: usize) -> Result<Q> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!("b_{{{j},{n}}} needs 0 <= j <= n")));
    }
    a_coeff(j + 1, n + 1)
}

/// Which operator a coefficient table belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    Lower,
    Upper,
}

/// Coefficients of `D_r(n)` (entries `a_{j,n}`) or `D^r(n)` (entries `b_{j,n}`).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialCoeffTable {
    pub n: usize,
    pub kind: RadialKind,
    pub entries: BTreeMap<usize, Q>,
}

impl RadialCoeffTable {
    /// Closed-form entries.
    pub fn closed(kind: RadialKind, n: usize) -> Self {
        let entries = match kind {
            RadialKind::Lower => (1..=n).map(|j| (j, a_coeff(j, n).expect("in range"))).collect(),
            RadialKind::Upper => (0..=n).map(|j| (j, b_coeff(j, n).expect("in range"))).collect(),
        };
        RadialCoeffTable { n, kind, entries }
    }

    /// Entries built from the recursion
    /// `a_{1,n+1} = -(2n-1) a_{1,n}`, `a_{j,n+1} = a_{j-1,n} - (2n-j) a_{j,n}`,
    /// `a_{n+1,n+1} = a_{n,n} = 1`; upper tables are read off via `b_{j,n} = a_{j+1,n+1}`.
    pub fn recursive(kind: RadialKind, n: usize) -> Self {
        let top = match kind {
            RadialKind::Lower => n,
            RadialKind::Upper => n + 1,
        };
        let mut row: Vec<Q> = vec![Q::from_integer(1.into())]; // a_{1,1}
        for level in 1..top.max(1) {
            // row holds a_{1..level, level}; build a_{1..level+1, level+1}
            let nn = level as i64;
            let mut next = Vec::with_capacity(level + 1);
            next.push(-row[0].clone() * Q::from_integer((2 * nn - 1).into()));
            for j in 2..=level {
                let jj = j as i64;
                next.push(row[j - 2].clone() - row[j - 1].clone() * Q::from_integer((2 * nn - jj).into()));
            }
            next.push(Q::from_integer(1.into()));
            row = next;
        }
        let entries = match kind {
            RadialKind::Lower if n == 0 => BTreeMap::new(),
            RadialKind::Lower => row.into_iter().enumerate().map(|(i, v)| (i + 1, v)).collect(),
            RadialKind::Upper => row.into_iter().enumerate().collect(),
        };
        RadialCoeffTable { n, kind, entries }
    }
}

/// `D_r(n)[e] = sum_{j=1}^n a_{j,n} r^{j-2n} d^j e / dr^j` (identity for `n = 0`).
pub fn d_r_closed(n: usize, e: &Expression) -> Expression {
    if n == 0 {
        return e.clone();
    }
    coefficient_sum(&RadialCoeffTable::closed(RadialKind::Lower, n), e)
}

/// `D^r(n)[e] = sum_{j=0}^n b_{j,n} r^{j-2n} d^j e / dr^j`.
pub fn d_r_upper_closed(n: usize, e: &Expression) -> Expression {
    coefficient_sum(&RadialCoeffTable::closed(RadialKind::Upper, n), e)
}

fn coefficient_sum(table: &RadialCoeffTable, e: &Expression) -> Expression {
    let n = table.n as f64;
    let mut derivative = e.clone();
    let mut order = 0usize;
    let mut terms = Vec::new();
    for (&j, c) in &table.entries {
        while order < j {
            derivative = derivative.diff(Var::R);
            order += 1;
        }
        let weight = Expression::constant(Complex64::new(q_to_f64(c), 0.0));
        terms.push(weight * Expression::r().powf(j as f64 - 2.0 * n) * derivative.clone());
    }
    Expression::sum(terms)
}

/// `D_r(n)[f g] = sum_j C(n,j) D_r(n-j)[f] D_r(j)[g]`.
pub fn leibniz_d_r(n: usize, f: &Expression, g: &Expression) -> Expression {
    Expression::sum((0..=n).map(|j| {
        let c = q_to_f64(&Q::from_integer(binomial(n as u64, j as u64)));
        Expression::real(c) * d_r_compose(n - j, f) * d_r_compose(j, g)
    }))
}

/// `D^r(n)[f g] = sum_j C(n,j) D_r(n-j)[f] D^r(j)[g]`.
pub fn leibniz_d_r_upper(n: usize, f: &Expression, g: &Expression) -> Expression {
    Expression::sum((0..=n).map(|j| {
        let c = q_to_f64(&Q::from_integer(binomial(n as u64, j as u64)));
        Expression::real(c) * d_r_compose(n - j, f) * d_r_upper_compose(j, g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    fn gauss() -> Expression {
        parse("exp(x0^2 - r^2)").unwrap()
    }

    #[test]
    fn coefficient_spot_values() {
        assert_eq!(a_coeff(1, 1).unwrap(), qi(1));
        assert_eq!(a_coeff(1, 2).unwrap(), qi(-1));
        assert_eq!(a_coeff(2, 3).unwrap(), qi(-3));
        assert_eq!(b_coeff(0, 1).unwrap(), qi(-1));
        assert!(a_coeff(0, 3).is_err());
        assert!(a_coeff(4, 3).is_err());
        assert!(b_coeff(4, 3).is_err());
    }

    #[test]
    fn recursion_matches_closed_form_small() {
        for n in 0..8 {
            for kind in [RadialKind::Lower, RadialKind::Upper] {
                assert_eq!(RadialCoeffTable::recursive(kind, n), RadialCoeffTable::closed(kind, n), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn compose_on_powers_of_r() {
        let r2 = Expression::r().powf(2.0);
        assert_eq!(d_r_compose(1, &r2), Expression::real(2.0));
        let r4 = Expression::r().powf(4.0);
        assert_eq!(d_r_compose(2, &r4), Expression::real(8.0));
        assert_eq!(d_r_closed(2, &r4), Expression::real(8.0));
        assert_eq!(d_r_upper_compose(1, &Expression::r()), Expression::zero());
        assert_eq!(d_r_compose(0, &r4), r4);
    }

    #[test]
    fn gaussian_is_an_eigenfunction() {
        for n in 0..=5 {
            let lhs = d_r_compose(n, &gauss());
            let rhs = gauss().scale(Complex64::new((-2.0f64).powi(n as i32), 0.0));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn closed_equals_composed_on_samples() {
        let e = parse("exp(x0*r)*sin(r^2) + cos(2*x0*r)").unwrap();
        for n in 0..=4 {
            let (a, b) = (d_r_closed(n, &e), d_r_compose(n, &e));
            let (c, d) = (d_r_upper_closed(n, &e), d_r_upper_compose(n, &e));
            for (x0, r) in [(0.3, 0.5), (-0.7, 1.9)] {
                assert!(close(a.eval(x0, r).unwrap(), b.eval(x0, r).unwrap(), 1e-11));
                assert!(close(c.eval(x0, r).unwrap(), d.eval(x0, r).unwrap(), 1e-11));
            }
        }
    }

    #[test]
    fn leibniz_rules() {
        let f = gauss();
        let g = parse("cos(2*x0*r)").unwrap();
        let s = parse("sin(2*x0*r)").unwrap();
        assert_eq!(leibniz_d_r(0, &f, &g), f.clone() * g.clone());
        let l = leibniz_d_r(2, &f, &g);
        let d = d_r_compose(2, &(f.clone() * g.clone()));
        let lu = leibniz_d_r_upper(1, &f, &s);
        let du = d_r_upper_compose(1, &(f.clone() * s.clone()));
        for (x0, r) in [(0.2, 0.4), (1.0, 1.5)] {
            assert!(close(l.eval(x0, r).unwrap(), d.eval(x0, r).unwrap(), 1e-12));
            assert!(close(lu.eval(x0, r).unwrap(), du.eval(x0, r).unwrap(), 1e-12));
        }
    }
}
