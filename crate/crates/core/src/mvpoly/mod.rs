//! Polynomials in the vector variable `x = (x_1, ..., x_m)` with Clifford
//! coefficients, the Dirac operator, and the Clifford-Hermite and
//! Clifford-Gegenbauer families.

mod basis;
mod operators;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::classical::Algebra;
use crate::clifford::{blade_label, check_dim, Multivector};
use crate::error::{Error, Result};
use crate::scalar::{q_to_f64, qi, Q};

pub use basis::{euler_degree, monogenic_basis, monogenic_generators, Homogeneity, MonogenicBasis};
pub use operators::{
    apply_d_alpha, apply_d_plus, explicit_gegenbauer, explicit_hermite, gegenbauer_operator, hermite_operator,
};

/// Exponent vector of a monomial `x_1^{a_1} ... x_m^{a_m}`.
pub type Monomial = Vec<u16>;

fn monomial_degree(mono: &Monomial) -> u32 {
    mono.iter().map(|&a| u32::from(a)).sum()
}

/// Multivariate polynomial with exact `R_{0,m}` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordPolynomial {
    m: usize,
    terms: BTreeMap<Monomial, Multivector<Q>>,
}

impl CliffordPolynomial {
    pub fn zero(m: usize) -> Self {
        CliffordPolynomial { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(Multivector::one(m))
    }

    pub fn constant(c: Multivector<Q>) -> Self {
        let m = c.dim();
        Self::term(vec![0; m], c)
    }

    pub fn scalar(c: Q, m: usize) -> Self {
        Self::constant(Multivector::scalar(c, m))
    }

    /// `c * x^mono`.
    pub fn term(mono: Monomial, c: Multivector<Q>) -> Self {
        let m = c.dim();
        assert_eq!(mono.len(), m, "monomial length must equal m");
        let mut out = Self::zero(m);
        out.add_term(mono, c);
        out
    }

    /// The coordinate `x_j` (1-based) as a scalar polynomial.
    pub fn coordinate(j: usize, m: usize) -> Self {
        let mut mono = vec![0; m];
        mono[j - 1] = 1;
        Self::term(mono, Multivector::one(m))
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector<Q>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Multivector<Q> {
        self.terms.get(mono).cloned().unwrap_or_else(|| Multivector::zero(self.m))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(monomial_degree).max()
    }

    pub fn add_term(&mut self, mono: Monomial, c: Multivector<Q>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                let sum = slot.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CliffordPolynomial { m: self.m, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.m);
        }
        CliffordPolynomial { m: self.m, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.scale(s))).collect() }
    }

    /// Product; coefficients multiply in the Clifford algebra with `self` on the left.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = Self::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(mono, ca.mul(cb));
            }
        }
        out
    }

    /// `c * self` for a constant multivector `c` on the left.
    pub fn left_mul_constant(&self, c: &Multivector<Q>) -> Self {
        let mut out = Self::zero(self.m);
        for (mono, v) in &self.terms {
            out.add_term(mono.clone(), c.mul(v));
        }
        out
    }

    /// `self * c` for a constant multivector `c` on the right.
    pub fn right_mul_constant(&self, c: &Multivector<Q>) -> Self {
        let mut out = Self::zero(self.m);
        for (mono, v) in &self.terms {
            out.add_term(mono.clone(), v.mul(c));
        }
        out
    }

    /// Partial derivative with respect to `x_j` (1-based).
    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.m);
        for (mono, c) in &self.terms {
            let a = mono[j - 1];
            if a == 0 {
                continue;
            }
            let mut lowered = mono.clone();
            lowered[j - 1] -= 1;
            out.add_term(lowered, c.scale(&qi(i64::from(a))));
        }
        out
    }

    /// `sum_j e_j * d/dx_j` over the given generator indices, acting from the left.
    pub(crate) fn dirac_over(&self, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut out = Self::zero(self.m);
        for j in indices {
            for (mono, c) in &self.terms {
                let a = mono[j - 1];
                if a == 0 {
                    continue;
                }
                let mut lowered = mono.clone();
                lowered[j - 1] -= 1;
                out.add_term(lowered, c.left_mul_generator(j).scale(&qi(i64::from(a))));
            }
        }
        out
    }

    /// Dirac operator `sum_j e_j d/dx_j` (left action).
    pub fn dirac(&self) -> Self {
        self.dirac_over(1..=self.m)
    }

    /// `sum_j d^2/dx_j^2`, applied componentwise.
    pub fn laplacian(&self) -> Self {
        (1..=self.m).fold(Self::zero(self.m), |acc, j| acc.add(&self.partial(j).partial(j)))
    }

    /// Euler operator `sum_j x_j d/dx_j`.
    pub fn euler(&self) -> Self {
        let mut out = Self::zero(self.m);
        for (mono, c) in &self.terms {
            out.add_term(mono.clone(), c.scale(&qi(i64::from(monomial_degree(mono)))));
        }
        out
    }

    pub fn grade_part(&self, grade: u32) -> Self {
        let mut out = Self::zero(self.m);
        for (mono, c) in &self.terms {
            out.add_term(mono.clone(), c.grade_part(grade));
        }
        out
    }

    /// Is every coefficient a pure scalar?
    pub fn is_scalar_valued(&self) -> bool {
        self.terms.values().all(|c| c.terms().all(|(b, _)| b == 0))
    }

    /// Floating-point snapshot for fast repeated evaluation.
    pub fn to_numeric(&self) -> NumericPolynomial {
        NumericPolynomial {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), c.terms().map(|(b, v)| (b, q_to_f64(v))).collect()))
                .collect(),
        }
    }

    /// Evaluates at a point of `R^m`.
    pub fn eval(&self, x: &[f64]) -> Multivector<f64> {
        self.to_numeric().eval(x)
    }
}

/// The vector variable `x = sum_j x_j e_j`.
pub fn vector_variable(m: usize) -> Result<CliffordPolynomial> {
    check_dim(m)?;
    let mut out = CliffordPolynomial::zero(m);
    for j in 1..=m {
        let mut mono = vec![0; m];
        mono[j - 1] = 1;
        out.add_term(mono, Multivector::generator(j, m));
    }
    Ok(out)
}

/// `|x|^2 = sum_j x_j^2` as a scalar-valued polynomial.
pub fn norm_squared(m: usize) -> Result<CliffordPolynomial> {
    check_dim(m)?;
    let mut out = CliffordPolynomial::zero(m);
    for j in 1..=m {
        let mut mono = vec![0; m];
        mono[j - 1] = 2;
        out.add_term(mono, Multivector::one(m));
    }
    Ok(out)
}

pub(crate) fn require_monogenic(p: &CliffordPolynomial) -> Result<()> {
    if p.dirac().is_zero() {
        Ok(())
    } else {
        Err(Error::NotMonogenic)
    }
}

impl Algebra<Q> for CliffordPolynomial {
    fn constant_like(&self, c: Q) -> Self {
        CliffordPolynomial::scalar(c, self.m)
    }
    fn add(&self, other: &Self) -> Self {
        CliffordPolynomial::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CliffordPolynomial::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CliffordPolynomial::mul(self, other)
    }
    fn scale(&self, c: &Q) -> Self {
        CliffordPolynomial::scale(self, c)
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in &self.terms {
            for (b, v) in c.terms() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                let vars: Vec<String> = mono
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| **a > 0)
                    .map(|(j, a)| if *a == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, a) })
                    .collect();
                let is_unit = v.is_one();
                match (is_unit, vars.is_empty(), b) {
                    (true, true, 0) => write!(f, "1")?,
                    (true, false, 0) => write!(f, "{}", vars.join("*"))?,
                    (true, true, _) => write!(f, "{}", blade_label(b))?,
                    (true, false, _) => write!(f, "{}*{}", vars.join("*"), blade_label(b))?,
                    (false, true, 0) => write!(f, "({v})")?,
                    (false, _, _) => {
                        write!(f, "({v})")?;
                        if !vars.is_empty() {
                            write!(f, "*{}", vars.join("*"))?;
                        }
                        if b != 0 {
                            write!(f, "*{}", blade_label(b))?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A [`CliffordPolynomial`] with `f64` coefficients, for grid evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericPolynomial {
    m: usize,
    terms: Vec<(Monomial, Vec<(u32, f64)>)>,
}

impl NumericPolynomial {
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn eval(&self, x: &[f64]) -> Multivector<f64> {
        assert_eq!(x.len(), self.m, "point dimension must equal m");
        let mut out = Multivector::zero(self.m);
        for (mono, coeffs) in &self.terms {
            let w: f64 = mono.iter().zip(x).map(|(&a, &xi)| xi.powi(i32::from(a))).product();
            for (b, v) in coeffs {
                out.add_term(*b, v * w);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_of_basic_polynomials() {
        let m = 3;
        // x1 e2 + x2 e1
        let p = CliffordPolynomial::coordinate(1, m)
            .left_mul_constant(&Multivector::generator(2, m))
            .add(&CliffordPolynomial::coordinate(2, m).left_mul_constant(&Multivector::generator(1, m)));
        assert!(p.dirac().is_zero());
        let x = vector_variable(m).unwrap();
        assert_eq!(x.dirac(), CliffordPolynomial::scalar(qi(-3), m));
        let n2 = norm_squared(m).unwrap();
        assert_eq!(n2.dirac(), x.scale(&qi(2)));
    }

    #[test]
    fn vector_variable_squares_to_minus_norm() {
        for m in 1..=5 {
            let x = vector_variable(m).unwrap();
            assert_eq!(x.mul(&x), norm_squared(m).unwrap().neg());
        }
        let n1 = norm_squared(1).unwrap();
        assert_eq!(n1, CliffordPolynomial::term(vec![2], Multivector::one(1)));
    }

    #[test]
    fn vector_variable_display() {
        assert_eq!(vector_variable(3).unwrap().to_string(), "x3*e3 + x2*e2 + x1*e1");
    }

    #[test]
    fn dirac_squared_is_minus_laplacian() {
        let m = 3;
        let x1 = CliffordPolynomial::coordinate(1, m);
        let x2 = CliffordPolynomial::coordinate(2, m);
        let x3 = CliffordPolynomial::coordinate(3, m);
        let c = Multivector::from_terms(m, [(0, qi(2)), (0b011, qi(-1)), (0b100, qi(3))]);
        let p = x1.mul(&x1).mul(&x2).add(&x3.mul(&x3).mul(&x3).mul(&x1)).right_mul_constant(&c);
        assert_eq!(p.dirac().dirac(), p.laplacian().neg());
    }

    #[test]
    fn numeric_evaluation() {
        let m = 2;
        let x = vector_variable(m).unwrap();
        let v = x.eval(&[0.5, -2.0]);
        assert_eq!(v.coefficient(0b01), 0.5);
        assert_eq!(v.coefficient(0b10), -2.0);
    }
}
