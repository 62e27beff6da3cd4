//! Arithmetic in the real Clifford algebra `R_{0,m}` (generators square to -1).
//!
//! Basis blades are stored as bitmasks: bit `j - 1` is set when `e_j` occurs.
//! Within a blade the generators are kept in increasing order, so a
//! multivector has a unique sparse representation and equality is a plain
//! map comparison.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Largest supported dimension.
pub const MAX_DIM: usize = 16;

pub fn check_dim(m: usize) -> Result<()> {
    if m == 0 || m > MAX_DIM {
        return Err(Error::UnsupportedDimension(m));
    }
    Ok(())
}

/// A basis blade `e_A` of `R_{0,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeMask {
    bits: u32,
    m: usize,
}

impl BladeMask {
    pub fn new(bits: u32, m: usize) -> Result<Self> {
        check_dim(m)?;
        if u64::from(bits) >= 1u64 << m {
            return Err(Error::IndexOutOfRange(format!("blade bits {bits:#b} exceed m = {m}")));
        }
        Ok(BladeMask { bits, m })
    }

    pub fn scalar(m: usize) -> Result<Self> {
        Self::new(0, m)
    }

    /// The generator `e_j`, `1 <= j <= m`.
    pub fn generator(j: usize, m: usize) -> Result<Self> {
        if j == 0 || j > m {
            return Err(Error::IndexOutOfRange(format!("generator e_{j} with m = {m}")));
        }
        Self::new(1 << (j - 1), m)
    }

    /// Blade from a list of generator indices given in increasing order.
    pub fn from_indices(indices: &[usize], m: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &j in indices {
            bits |= Self::generator(j, m)?.bits;
        }
        Self::new(bits, m)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> usize {
        self.m
    }

    pub fn grade(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn indices(self) -> Vec<usize> {
        (0..self.m).filter(|j| self.bits >> j & 1 == 1).map(|j| j + 1).collect()
    }
}

impl fmt::Display for BladeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", blade_label(self.bits))
    }
}

/// `"1"` for the identity, otherwise `"e1"`, `"e12"`, `"e1_10"` style labels.
pub fn blade_label(bits: u32) -> String {
    if bits == 0 {
        return "1".to_string();
    }
    let idx: Vec<String> = (0..32).filter(|j| bits >> j & 1 == 1).map(|j| (j + 1).to_string()).collect();
    if idx.iter().all(|s| s.len() == 1) {
        format!("e{}", idx.concat())
    } else {
        format!("e{}", idx.join("_"))
    }
}

/// True when `e_a e_b = -e_{a xor b}`.
///
/// Each generator of `b` moves left past the generators of `a` with a larger
/// index (one sign flip per transposition); each shared generator then
/// squares to -1.
#[inline]
pub fn blade_product_is_negative(a: u32, b: u32) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    (swaps + (a & b).count_ones()) & 1 == 1
}

/// Product of two basis blades: `e_a e_b = sign * e_c`.
pub fn blade_product(a: BladeMask, b: BladeMask) -> Result<(i8, BladeMask)> {
    if a.m != b.m {
        return Err(Error::DimensionMismatch(a.m, b.m));
    }
    let sign = if blade_product_is_negative(a.bits, b.bits) { -1 } else { 1 };
    Ok((sign, BladeMask { bits: a.bits ^ b.bits, m: a.m }))
}

/// Element of `R_{0,m}` in canonical sparse form (no zero coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    m: usize,
    terms: BTreeMap<u32, T>,
}

impl<T: Coefficient> Multivector<T> {
    pub fn zero(m: usize) -> Self {
        Multivector { m, terms: BTreeMap::new() }
    }

    pub fn scalar(value: T, m: usize) -> Self {
        Self::blade(0, value, m)
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(T::one(), m)
    }

    /// `value * e_bits`. Panics if `bits` does not fit in `m` generators.
    pub fn blade(bits: u32, value: T, m: usize) -> Self {
        assert!(u64::from(bits) < 1u64 << m, "blade {bits:#b} outside R_0,{m}");
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(bits, value);
        }
        Multivector { m, terms }
    }

    /// The generator `e_j` (1-based).
    pub fn generator(j: usize, m: usize) -> Self {
        assert!(j >= 1 && j <= m, "generator e_{j} outside R_0,{m}");
        Self::blade(1 << (j - 1), T::one(), m)
    }

    /// `sum_j v_j e_j`.
    pub fn vector(components: &[T]) -> Self {
        let m = components.len();
        let mut out = Self::zero(m);
        for (j, c) in components.iter().enumerate() {
            out.add_term(1 << j, c.clone());
        }
        out
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (u32, T)>) -> Self {
        let mut out = Self::zero(m);
        for (bits, c) in terms {
            out.add_term(bits, c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, bits: u32) -> T {
        self.terms.get(&bits).cloned().unwrap_or_else(T::zero)
    }

    pub fn scalar_part(&self) -> T {
        self.coefficient(0)
    }

    /// Adds `c * e_bits` in place, keeping the sparse form canonical.
    pub fn add_term(&mut self, bits: u32, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&bits) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&bits);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(bits, c);
            }
        }
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(self.mul(other))
    }

    /// Sum. Panics on a dimension mismatch; see [`Multivector::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Multivector { m: self.m, terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, c.clone() * s.clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Multivector { m: self.m, terms }
    }

    /// Clifford product. Panics on a dimension mismatch; see
    /// [`Multivector::try_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = Self::zero(self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.clone() * cb.clone();
                let c = if blade_product_is_negative(*a, *b) { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        out
    }

    /// `e_j * self` (left multiplication by a generator).
    pub fn left_mul_generator(&self, j: usize) -> Self {
        let g = 1u32 << (j - 1);
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let c = if blade_product_is_negative(g, *b) { -c.clone() } else { c.clone() };
                (b ^ g, c)
            })
            .collect();
        Multivector { m: self.m, terms }
    }

    /// Keeps only the blades of the given grade.
    pub fn grade_part(&self, grade: u32) -> Self {
        let terms = self.terms.iter().filter(|(b, _)| b.count_ones() == grade).map(|(b, c)| (*b, c.clone())).collect();
        Multivector { m: self.m, terms }
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector::from_terms(self.m, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }
}

impl Multivector<f64> {
    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> f64 {
        self.terms.values().fold(0.0, |acc, c| acc.max(c.abs()))
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *b == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c}){}", blade_label(*b))?;
            }
        }
        Ok(())
    }
}
