//! Homogeneous monogenic polynomials.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{CliffordPolynomial, Monomial};
use crate::clifford::{blade_product_is_negative, check_dim, Multivector};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::scalar::{factorial, qi, Q};

/// Result of the homogeneity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Degree(u32),
    Inhomogeneous,
}

/// Degree `k` if `sum_j x_j d/dx_j p = k p`.
pub fn euler_degree(p: &CliffordPolynomial) -> Result<Homogeneity> {
    let Some(deg) = p.degree() else { return Err(Error::ZeroPolynomial) };
    if p.euler() == p.scale(&qi(i64::from(deg))) {
        Ok(Homogeneity::Degree(deg))
    } else {
        Ok(Homogeneity::Inhomogeneous)
    }
}

/// All exponent vectors of total degree `k` in `m` variables.
pub(crate) fn monomials_of_degree(m: usize, k: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Monomial, left: usize, k: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(k as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a as u16);
            rec(prefix, left - 1, k - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), m, k, &mut out);
    out
}

/// Linearly independent homogeneous monogenic polynomials of degree `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicBasis {
    m: usize,
    k: usize,
    elements: Vec<CliffordPolynomial>,
    spans_right_module: bool,
}

impl MonogenicBasis {
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> &[CliffordPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the elements only generate the space under right
    /// multiplication by constant multivectors (see [`monogenic_generators`]).
    pub fn is_module_basis(&self) -> bool {
        self.spans_right_module
    }

    /// Dimension over `R` of the full space of `R_{0,m}`-valued homogeneous
    /// monogenic polynomials of degree `k`, as spanned by this basis.
    pub fn real_dimension(&self) -> usize {
        if self.spans_right_module {
            self.elements.len() << self.m
        } else {
            self.elements.len()
        }
    }

    /// Is `p` in the real span (or right-module span) of the basis?
    pub fn contains(&self, p: &CliffordPolynomial) -> bool {
        let mut index = Coordinates::new();
        let mut ech = Echelon::new();
        for e in &self.elements {
            if self.spans_right_module {
                for b in 0..1u32 << self.m {
                    ech.insert(index.row(&e.right_mul_constant(&Multivector::blade(b, qi(1), self.m))));
                }
            } else {
                ech.insert(index.row(e));
            }
        }
        ech.contains(&index.row(p))
    }
}

/// Assigns column indices to (monomial, blade) pairs on demand.
struct Coordinates {
    cols: BTreeMap<(Monomial, u32), usize>,
}

impl Coordinates {
    fn new() -> Self {
        Coordinates { cols: BTreeMap::new() }
    }

    fn col(&mut self, mono: &Monomial, blade: u32) -> usize {
        let next = self.cols.len();
        *self.cols.entry((mono.clone(), blade)).or_insert(next)
    }

    fn row(&mut self, p: &CliffordPolynomial) -> SparseRow {
        let mut row = SparseRow::new();
        for (mono, c) in p.terms() {
            for (b, v) in c.terms() {
                row.insert(self.col(mono, b), v.clone());
            }
        }
        row
    }
}

/// Basis of the real vector space of `R_{0,m}`-valued homogeneous monogenic
/// polynomials of degree `k`.
///
/// Builds the matrix of the Dirac operator from degree-`k` (monomial, blade)
/// pairs to degree-`k-1` pairs and returns its exact rational nullspace. The
/// space has real dimension `2^m * C(k+m-2, m-2)`, so this is meant for small
/// `m`; [`monogenic_generators`] gives a compact generating set for any `m`.
pub fn monogenic_basis(m: usize, k: usize) -> Result<MonogenicBasis> {
    check_dim(m)?;
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    if k == 0 {
        let elements = (0..1u32 << m).map(|b| CliffordPolynomial::constant(Multivector::blade(b, qi(1), m))).collect();
        return Ok(MonogenicBasis { m, k, elements, spans_right_module: false });
    }
    let monos = monomials_of_degree(m, k as u32);
    let blades = 1usize << m;
    let col = |mi: usize, b: u32| mi * blades + b as usize;
    // rows indexed by (lower monomial, blade)
    let mut rows: BTreeMap<(Monomial, u32), SparseRow> = BTreeMap::new();
    for (mi, mono) in monos.iter().enumerate() {
        for b in 0..blades as u32 {
            for j in 1..=m {
                let a = mono[j - 1];
                if a == 0 {
                    continue;
                }
                let mut lower = mono.clone();
                lower[j - 1] -= 1;
                let g = 1u32 << (j - 1);
                let mut v = qi(i64::from(a));
                if blade_product_is_negative(g, b) {
                    v = -v;
                }
                let row = rows.entry((lower, b ^ g)).or_default();
                let entry = row.entry(col(mi, b)).or_insert_with(Q::zero);
                *entry += v;
            }
        }
    }
    let mut ech = Echelon::new();
    for (_, row) in rows {
        ech.insert(row.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }
    let elements = ech
        .nullspace(monos.len() * blades)
        .into_iter()
        .map(|v| {
            let mut p = CliffordPolynomial::zero(m);
            for (c, x) in v {
                let (mi, b) = (c / blades, (c % blades) as u32);
                p.add_term(monos[mi].clone(), Multivector::blade(b, x, m));
            }
            p
        })
        .collect();
    Ok(MonogenicBasis { m, k, elements, spans_right_module: false })
}

/// Generators of the homogeneous monogenic polynomials of degree `k` as a
/// right `R_{0,m}`-module.
///
/// Each generator is the monogenic extension of a monomial `g` in
/// `x_2, ..., x_m` across the hyperplane `x_1 = 0`:
/// `P = sum_n x_1^n / n! (e_1 D')^n g` with `D' = sum_{j>=2} e_j d/dx_j`.
/// A monogenic polynomial is determined by its restriction to the hyperplane,
/// so `P = sum_g P_g c_g` with constant multivectors `c_g`; the generators
/// form a free basis of `C(k+m-2, m-2)` elements.
pub fn monogenic_generators(m: usize, k: usize) -> Result<MonogenicBasis> {
    check_dim(m)?;
    if m < 2 {
        return Err(Error::UnsupportedDimension(m));
    }
    let e1 = Multivector::<Q>::generator(1, m);
    let elements = monomials_of_degree(m - 1, k as u32)
        .into_iter()
        .map(|tail| {
            let mut mono = vec![0u16];
            mono.extend(tail);
            let mut term = CliffordPolynomial::term(mono, Multivector::one(m));
            let mut out = CliffordPolynomial::zero(m);
            let x1 = CliffordPolynomial::coordinate(1, m);
            let mut x1_pow = CliffordPolynomial::one(m);
            for n in 0..=k {
                if term.is_zero() {
                    break;
                }
                let inv = Q::new(1.into(), factorial(n as u64));
                out = out.add(&x1_pow.mul(&term).scale(&inv));
                term = term.dirac_over(2..=m).left_mul_constant(&e1);
                x1_pow = x1_pow.mul(&x1);
            }
            out
        })
        .collect();
    Ok(MonogenicBasis { m, k, elements, spans_right_module: true })
}
