//! Cauchy-Kowalevski extensions as power series in `x0`.

use num_traits::ToPrimitive;

use crate::classical::{jacobi_sum, laguerre, pochhammer};
use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::fueter::FtResult;
use crate::mvpoly::{
    euler_degree, explicit_gegenbauer, explicit_hermite, gegenbauer_operator, hermite_operator, CliffordPolynomial,
    Homogeneity, NumericPolynomial,
};
use crate::scalar::{factorial, q_from_f64, qi, Q};

/// `CK[g](x0, x) = sum_n (-x0)^n / n! D^n g(x)` for a polynomial `g`; the
/// series is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CkPolynomial {
    m: usize,
    /// coefficient of `x0^n`
    coeffs: Vec<CliffordPolynomial>,
}

pub fn ck_generic(g: &CliffordPolynomial) -> CkPolynomial {
    let m = g.dim();
    let mut coeffs = Vec::new();
    let mut term = g.clone();
    let mut n = 0u64;
    while !term.is_zero() || coeffs.is_empty() {
        let sign = if n.is_multiple_of(2) { qi(1) } else { qi(-1) };
        coeffs.push(term.scale(&(sign / Q::from_integer(factorial(n)))));
        term = term.dirac();
        n += 1;
    }
    CkPolynomial { m, coeffs }
}

impl CkPolynomial {
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn coefficients(&self) -> &[CliffordPolynomial] {
        &self.coeffs
    }

    /// The value on the hyperplane `x0 = 0`.
    pub fn restriction(&self) -> &CliffordPolynomial {
        &self.coeffs[0]
    }

    /// Coefficients of `x0^n` in `(d/dx0 + D) CK[g]`; all zero for a
    /// monogenic extension.
    pub fn cauchy_riemann_defect(&self) -> Vec<CliffordPolynomial> {
        (0..self.coeffs.len())
            .map(|n| {
                let next = self.coeffs.get(n + 1).map_or_else(
                    || CliffordPolynomial::zero(self.m),
                    |c| c.scale(&qi(n as i64 + 1)),
                );
                next.add(&self.coeffs[n].dirac())
            })
            .collect()
    }

    pub fn is_monogenic(&self) -> bool {
        self.cauchy_riemann_defect().iter().all(CliffordPolynomial::is_zero)
    }

    pub fn eval(&self, x0: f64, x: &[f64]) -> Multivector<f64> {
        let mut acc = Multivector::zero(self.m);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(&x0).add(&c.eval(x));
        }
        acc
    }
}

/// The weight whose CK-extension a [`CkSeries`] sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `exp(-|x|^2) P_k`
    Hermite,
    /// `(1 - |x|^2)^alpha P_k`
    Gegenbauer { alpha: f64 },
}

/// Truncated weighted series
/// `sum_{n <= N} x0^n / n! W_n(x)`, with `W_n = e^{-|x|^2} H_{n,m}(P_k)` or
/// `W_n = (1-|x|^2)^{alpha-n} C^{(alpha-n)}_{n,m}(P_k)`.
///
/// The radial factor of each term is stored as its scale and parameters and
/// evaluated by recurrence, so `N` can be large for any `m`.
#[derive(Debug, Clone)]
pub struct CkSeries {
    family: Family,
    m: usize,
    k: usize,
    trunc: usize,
    pk: CliffordPolynomial,
    pk_numeric: NumericPolynomial,
    terms: Vec<RadialTerm>,
}

/// `scale * R(|x|^2) * x^{odd}` with `R` a Laguerre or Jacobi polynomial.
#[derive(Debug, Clone, PartialEq)]
struct RadialTerm {
    scale: f64,
    degree: usize,
    odd: bool,
    a: f64,
    b: f64,
}

fn check_pk(pk: &CliffordPolynomial) -> Result<usize> {
    if !pk.dirac().is_zero() {
        return Err(Error::NotMonogenic);
    }
    match euler_degree(pk)? {
        Homogeneity::Degree(d) => Ok(d as usize),
        Homogeneity::Inhomogeneous => Err(Error::Domain("P_k is not homogeneous".into())),
    }
}

fn to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn ck_hermite_series(pk: &CliffordPolynomial, trunc: usize) -> Result<CkSeries> {
    let k = check_pk(pk)?;
    let m = pk.dim();
    let terms = (0..=trunc)
        .map(|n| {
            let q = n / 2;
            let odd = n % 2 == 1;
            // 2^n q! / n!
            let scale = Q::new(factorial(q as u64) << n, factorial(n as u64));
            let a = k as f64 + m as f64 / 2.0 - if odd { 0.0 } else { 1.0 };
            RadialTerm { scale: to_f64(&scale), degree: q, odd, a, b: 0.0 }
        })
        .collect();
    Ok(CkSeries { family: Family::Hermite, m, k, trunc, pk: pk.clone(), pk_numeric: pk.to_numeric(), terms })
}

pub fn ck_gegenbauer_series(pk: &CliffordPolynomial, alpha: f64, trunc: usize) -> Result<CkSeries> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha = {alpha} is not finite")));
    }
    let k = check_pk(pk)?;
    let m = pk.dim();
    let terms = (0..=trunc)
        .map(|n| {
            let q = n / 2;
            let odd = n % 2 == 1;
            let shifted = alpha - n as f64;
            // 2^n q! (shifted + q + 1)_{q or q+1} / n!
            let base = Q::new(factorial(q as u64) << n, factorial(n as u64));
            let poch = pochhammer(&(shifted + q as f64 + 1.0), q + usize::from(odd));
            let a = k as f64 + m as f64 / 2.0 - if odd { 0.0 } else { 1.0 };
            RadialTerm { scale: to_f64(&base) * poch, degree: q, odd, a, b: shifted }
        })
        .collect();
    Ok(CkSeries {
        family: Family::Gegenbauer { alpha },
        m,
        k,
        trunc,
        pk: pk.clone(),
        pk_numeric: pk.to_numeric(),
        terms,
    })
}

impl CkSeries {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// `(S, V)` with the series equal to `(S + w V) P_k` at `|x| = r`.
    pub fn eval_parts(&self, x0: f64, r: f64) -> Result<(f64, f64)> {
        let t = r * r;
        let (mut even, mut odd) = (0.0, 0.0);
        let mut x0_pow = 1.0;
        for term in &self.terms {
            let radial = match self.family {
                Family::Hermite => term.scale * laguerre(term.degree, &term.a, &t),
                Family::Gegenbauer { .. } => {
                    if t >= 1.0 {
                        return Err(Error::Domain(format!("|x| = {r} must be below 1")));
                    }
                    let weight = (1.0 - t).powf(term.b);
                    term.scale * weight * jacobi_sum(term.degree, &term.a, &term.b, &(1.0 - 2.0 * t))
                }
            };
            if term.odd {
                odd += x0_pow * radial;
            } else {
                even += x0_pow * radial;
            }
            x0_pow *= x0;
        }
        // odd terms carry x = r w
        let (s, v) = (even, odd * r);
        Ok(match self.family {
            Family::Hermite => {
                let g = (-t).exp();
                (g * s, g * v)
            }
            Family::Gegenbauer { .. } => (s, v),
        })
    }

    pub fn eval(&self, x0: f64, x: &[f64]) -> Result<Multivector<f64>> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch(x.len(), self.m));
        }
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let (s, v) = self.eval_parts(x0, r)?;
        let omega_v: Vec<f64> = x.iter().map(|c| if r == 0.0 { 0.0 } else { c / r * v }).collect();
        let radial = Multivector::scalar(s, self.m).add(&Multivector::vector(&omega_v));
        Ok(radial.mul(&self.pk_numeric.eval(x)))
    }

    /// The series as a [`FtResult`]-shaped comparison: max difference of the
    /// two multivector values over `points`.
    pub fn max_deviation(&self, other: &FtResult, points: &[(f64, Vec<f64>)]) -> Result<f64> {
        let mut worst = 0.0f64;
        for (x0, x) in points {
            worst = worst.max(self.eval(*x0, x)?.sub(&other.eval(*x0, x)?).max_norm());
        }
        Ok(worst)
    }

    /// The polynomial part of the `n`-th term (without `1/n!` and weight)
    /// from the explicit radial formula, exactly.
    pub fn explicit_coefficient(&self, n: usize) -> Result<CliffordPolynomial> {
        let poly = match self.family {
            Family::Hermite => explicit_hermite(n, self.m, self.k)?,
            Family::Gegenbauer { alpha } => explicit_gegenbauer(n, self.m, self.k, &self.exact_shifted(alpha, n)?)?,
        };
        Ok(poly.mul(&self.pk))
    }

    /// The same polynomial from the defining operator chain.
    pub fn operator_coefficient(&self, n: usize) -> Result<CliffordPolynomial> {
        match self.family {
            Family::Hermite => hermite_operator(n, &self.pk),
            Family::Gegenbauer { alpha } => gegenbauer_operator(n, &self.exact_shifted(alpha, n)?, &self.pk),
        }
    }

    fn exact_shifted(&self, alpha: f64, n: usize) -> Result<Q> {
        let a = q_from_f64(alpha).ok_or_else(|| Error::Domain(format!("alpha = {alpha} is not finite")))?;
        Ok(a - qi(n as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fueter::hermite_gf_closed;
    use crate::mvpoly::{monogenic_generators, vector_variable};
    use crate::scalar::q;

    #[test]
    fn generic_extension_cases() {
        let m = 3;
        let one = CliffordPolynomial::one(m);
        assert_eq!(ck_generic(&one).coefficients(), std::slice::from_ref(&one));
        let x = vector_variable(m).unwrap();
        let ck = ck_generic(&x);
        assert_eq!(ck.coefficients().len(), 2);
        assert_eq!(ck.coefficients()[1], CliffordPolynomial::scalar(qi(3), m));
        assert!(ck.is_monogenic());
        let p = monogenic_generators(m, 2).unwrap().elements()[1].clone();
        assert_eq!(ck_generic(&p).coefficients(), &[p]);
    }

    #[test]
    fn generic_extension_of_a_rich_polynomial() {
        let m = 3;
        let x = vector_variable(m).unwrap();
        let g = x.mul(&x).mul(&x).add(&CliffordPolynomial::coordinate(2, m).mul(&x));
        let ck = ck_generic(&g);
        assert!(ck.is_monogenic());
        assert_eq!(ck.restriction(), &g);
    }

    #[test]
    fn hermite_series_origin_slice() {
        let s = ck_hermite_series(&CliffordPolynomial::one(3), 30).unwrap();
        let (a, b) = s.eval_parts(0.0, 0.8).unwrap();
        assert!((a - (-0.64f64).exp()).abs() < 1e-15);
        assert_eq!(b, 0.0);
    }

    #[test]
    fn hermite_series_matches_closed_form_at_sample() {
        let one = CliffordPolynomial::one(3);
        let s = ck_hermite_series(&one, 30).unwrap();
        let f = hermite_gf_closed(3, 0, &one).unwrap();
        let x = [0.3, 0.4, 0.1];
        let d = s.eval(0.5, &x).unwrap().sub(&f.eval(0.5, &x).unwrap()).max_norm();
        assert!(d < 1e-9, "{d}");
    }

    #[test]
    fn series_coefficients_agree_with_operator_chain() {
        let pk = monogenic_generators(3, 1).unwrap().elements()[0].clone();
        let h = ck_hermite_series(&pk, 4).unwrap();
        let g = ck_gegenbauer_series(&pk, 1.5, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(h.explicit_coefficient(n).unwrap(), h.operator_coefficient(n).unwrap());
            assert_eq!(g.explicit_coefficient(n).unwrap(), g.operator_coefficient(n).unwrap());
        }
    }

    #[test]
    fn numeric_terms_match_exact_coefficients() {
        let pk = monogenic_generators(3, 1).unwrap().elements()[1].clone();
        let x = [0.2, -0.3, 0.25];
        let r = (0.04f64 + 0.09 + 0.0625).sqrt();
        for (s, weight) in [
            (ck_hermite_series(&pk, 7).unwrap(), (-r * r).exp()),
            (ck_gegenbauer_series(&pk, 1.5, 7).unwrap(), 1.0),
        ] {
            let x0: f64 = 0.3;
            let mut want = Multivector::zero(3);
            for n in 0..=7 {
                let w = match s.family() {
                    Family::Hermite => weight,
                    Family::Gegenbauer { alpha } => (1.0 - r * r).powf(alpha - n as f64),
                };
                let c = s.explicit_coefficient(n).unwrap().eval(&x);
                let f = factorial(n as u64).to_f64().unwrap();
                want = want.add(&c.scale(&(w * x0.powi(n as i32) / f)));
            }
            let got = s.eval(x0, &x).unwrap();
            assert!(got.sub(&want).max_norm() < 1e-12, "{:?}", s.family());
        }
    }

    #[test]
    fn gegenbauer_series_domain() {
        let s = ck_gegenbauer_series(&CliffordPolynomial::one(3), 1.5, 25).unwrap();
        assert!(matches!(s.eval_parts(0.1, 1.0), Err(Error::Domain(_))));
        let (a, b) = s.eval_parts(0.0, 0.6).unwrap();
        assert!((a - 0.512).abs() < 1e-14 && b == 0.0);
        let int = ck_gegenbauer_series(&CliffordPolynomial::one(3), 2.0, 10).unwrap();
        assert!(int.eval_parts(0.1, 0.999).unwrap().0.is_finite());
    }

    #[test]
    fn exact_shift_uses_the_binary_value() {
        let s = ck_gegenbauer_series(&CliffordPolynomial::one(3), 0.5, 2).unwrap();
        assert_eq!(s.exact_shifted(0.5, 2).unwrap(), q(-3, 2));
    }
}
