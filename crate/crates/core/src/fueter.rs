//! The Fueter transform in radial form, monomial images, and closed-form
//! generating functions for the Clifford-Hermite and Clifford-Gegenbauer
//! families.
//!
//! Every function here has the shape `(A(x0, r) + w B(x0, r)) P_k(x)` with
//! `r = |x|` and `w = x / r`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classical::{binomial, double_factorial, minus_one_pow, Algebra, UPoly};
use crate::clifford::{check_dim, Multivector};
use crate::error::{Error, Result};
use crate::mvpoly::{euler_degree, CliffordPolynomial, Homogeneity, NumericPolynomial};
use crate::radial::{d_r_closed, d_r_upper_closed, Expression};
use crate::scalar::{factorial, q_to_f64, qi, Q};

/// Which part of a complex-valued expression carries the real function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

impl Part {
    fn take(self, v: Complex64) -> f64 {
        match self {
            Part::Re => v.re,
            Part::Im => v.im,
        }
    }
}

/// `(A + w B) P_k` with `A`, `B` given as expressions in `(x0, r)`.
#[derive(Debug, Clone)]
pub struct FtResult {
    m: usize,
    k: usize,
    a: Expression,
    a_part: Part,
    b: Expression,
    b_part: Part,
    pk: CliffordPolynomial,
    pk_numeric: NumericPolynomial,
}

/// `N = k + (m-1)/2`, after checking that `m` is odd.
pub fn radial_order(m: usize, k: usize) -> Result<usize> {
    check_dim(m)?;
    if m.is_multiple_of(2) {
        return Err(Error::EvenDimension(m));
    }
    Ok(k + (m - 1) / 2)
}

fn check_pk(pk: &CliffordPolynomial, m: usize, k: usize) -> Result<()> {
    if pk.dim() != m {
        return Err(Error::DimensionMismatch(pk.dim(), m));
    }
    if !pk.dirac().is_zero() {
        return Err(Error::NotMonogenic);
    }
    match euler_degree(pk)? {
        Homogeneity::Degree(d) if d as usize == k => Ok(()),
        Homogeneity::Degree(d) => Err(Error::Domain(format!("P_k has degree {d}, expected k = {k}"))),
        Homogeneity::Inhomogeneous => Err(Error::Domain("P_k is not homogeneous".into())),
    }
}

impl FtResult {
    /// Wraps two real-valued expressions; `m` must be odd and `pk` monogenic
    /// and homogeneous of degree `k`.
    pub fn new(m: usize, k: usize, a: Expression, b: Expression, pk: CliffordPolynomial) -> Result<Self> {
        Self::with_parts(m, k, (a, Part::Re), (b, Part::Re), pk)
    }

    fn with_parts(
        m: usize,
        k: usize,
        a: (Expression, Part),
        b: (Expression, Part),
        pk: CliffordPolynomial,
    ) -> Result<Self> {
        radial_order(m, k)?;
        check_pk(&pk, m, k)?;
        let pk_numeric = pk.to_numeric();
        Ok(FtResult { m, k, a: a.0, a_part: a.1, b: b.0, b_part: b.1, pk, pk_numeric })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn scalar_expr(&self) -> (&Expression, Part) {
        (&self.a, self.a_part)
    }

    pub fn vector_expr(&self) -> (&Expression, Part) {
        (&self.b, self.b_part)
    }

    pub fn pk(&self) -> &CliffordPolynomial {
        &self.pk
    }

    /// The same radial parts with another `P_k` of the same degree.
    pub fn with_pk(&self, pk: &CliffordPolynomial) -> Result<Self> {
        check_pk(pk, self.m, self.k)?;
        Ok(FtResult { pk: pk.clone(), pk_numeric: pk.to_numeric(), ..self.clone() })
    }

    /// Multiplies both radial parts by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        let s = Complex64::new(c, 0.0);
        FtResult { a: self.a.scale(s), b: self.b.scale(s), ..self.clone() }
    }

    /// `(A, B)` at `(x0, r)`.
    pub fn eval_parts(&self, x0: f64, r: f64) -> Result<(f64, f64)> {
        let a = self.a_part.take(self.a.eval(x0, r)?);
        let b = self.b_part.take(self.b.eval(x0, r)?);
        Ok((a, b))
    }

    /// The multivector value at `(x0, x)`, `x` in `R^m`, `x != 0`.
    pub fn eval(&self, x0: f64, x: &[f64]) -> Result<Multivector<f64>> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch(x.len(), self.m));
        }
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if r == 0.0 {
            return Err(Error::Pole("w = x / r is undefined at r = 0".into()));
        }
        let (a, b) = self.eval_parts(x0, r)?;
        let omega_b: Vec<f64> = x.iter().map(|v| v / r * b).collect();
        let radial = Multivector::scalar(a, self.m).add(&Multivector::vector(&omega_b));
        Ok(radial.mul(&self.pk_numeric.eval(x)))
    }
}

/// `Ft[h, P_k] = (2k+m-1)!! (Re D_r(N)[h] + w Im D^r(N)[h]) P_k`,
/// `N = k + (m-1)/2`, with `h` an expression in `z = x0 + i r`.
pub fn ft_transform(h: &Expression, pk: &CliffordPolynomial, m: usize, k: usize) -> Result<FtResult> {
    let n = radial_order(m, k)?;
    let df = Complex64::new(double_factorial((2 * k + m - 1) as i64).to_f64().unwrap_or(f64::INFINITY), 0.0);
    let a = d_r_closed(n, h).scale(df);
    let b = d_r_upper_closed(n, h).scale(df);
    FtResult::with_parts(m, k, (a, Part::Re), (b, Part::Im), pk.clone())
}

/// The four holomorphic monomial inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialKind {
    /// `z^n`
    Power,
    /// `i z^n`
    IPower,
    /// `z^{-n}`
    InversePower,
    /// `i z^{-n}`
    IInversePower,
}

impl MonomialKind {
    pub const ALL: [MonomialKind; 4] =
        [MonomialKind::Power, MonomialKind::IPower, MonomialKind::InversePower, MonomialKind::IInversePower];

    /// The input `h` as an expression.
    pub fn expression(self, n: usize) -> Expression {
        let p = n as f64;
        match self {
            MonomialKind::Power => Expression::z().powf(p),
            MonomialKind::IPower => Expression::i() * Expression::z().powf(p),
            MonomialKind::InversePower => Expression::z().powf(-p),
            MonomialKind::IInversePower => Expression::i() * Expression::z().powf(-p),
        }
    }
}

/// `x^s` with an optional `1/r` factor; the Clifford power of the vector
/// variable for any integer `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed {
    pub x_power: i64,
    pub inv_r: bool,
}

impl Seed {
    /// `x^{2t} = (-1)^t r^{2t}`, `x^{2t+1} = (-1)^t r^{2t} x`.
    pub fn eval(&self, x: &[f64]) -> Multivector<f64> {
        let m = x.len();
        let r2: f64 = x.iter().map(|v| v * v).sum();
        let t = self.x_power.div_euclid(2);
        let mut w = minus_one_pow(t) as f64 * r2.powi(t as i32);
        if self.inv_r {
            w /= r2.sqrt();
        }
        if self.x_power.rem_euclid(2) == 0 {
            Multivector::scalar(w, m)
        } else {
            let v: Vec<f64> = x.iter().map(|c| c * w).collect();
            Multivector::vector(&v)
        }
    }
}

/// Image of a monomial: `Ft[h, P_k](0, x) = constant * seed(x) P_k(x)`.
///
/// Since the image is monogenic, it is the CK-extension of its restriction.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialImage {
    pub constant: Q,
    pub seed: Seed,
}

impl MonomialImage {
    pub fn eval(&self, x: &[f64], pk: &NumericPolynomial) -> Multivector<f64> {
        self.seed.eval(x).scale(&q_to_f64(&self.constant)).mul(&pk.eval(x))
    }
}

fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn dfq(n: i64) -> Q {
    Q::from_integer(double_factorial(n))
}

/// Constants and seeds of the monomial images at `x0 = 0`.
pub fn ft_monomial(n: usize, kind: MonomialKind, m: usize, k: usize) -> Result<MonomialImage> {
    let big_n = radial_order(m, k)? as i64;
    let n = n as i64;
    let df = dfq(2 * big_n);
    let (constant, seed) = match kind {
        MonomialKind::Power => {
            let half = n / 2;
            let c1 = if n < 2 * big_n {
                Q::zero()
            } else {
                int(-2).pow(big_n as i32)
                    * &df
                    * Q::new(factorial(half as u64), factorial((half - big_n) as u64))
            };
            (c1, Seed { x_power: n - 2 * big_n, inv_r: false })
        }
        MonomialKind::IPower => {
            let c2: Q = if n % 2 == 0 {
                (1..=big_n).map(|j| int(n - (2 * j - 1))).product()
            } else {
                (0..big_n).map(|j| int(n - 2 * j)).product()
            };
            (int(minus_one_pow(big_n)) * &df * c2, Seed { x_power: n - 2 * big_n + 1, inv_r: true })
        }
        MonomialKind::InversePower => {
            let c3 = if n == 0 {
                Q::zero()
            } else if n % 2 == 0 {
                dfq(n + 2 * big_n - 2) / dfq(n - 2)
            } else {
                dfq(n + 2 * big_n - 1) / dfq(n - 1)
            };
            (&df * c3, Seed { x_power: -(n + 2 * big_n), inv_r: false })
        }
        MonomialKind::IInversePower => {
            let c4 = if n % 2 == 0 {
                dfq(n + 2 * big_n - 1) / dfq(n - 1)
            } else {
                dfq(n + 2 * big_n - 2) / dfq(n - 2)
            };
            (&df * c4, Seed { x_power: -(n + 2 * big_n - 1), inv_r: true })
        }
    };
    Ok(MonomialImage { constant, seed })
}

/// CK-extension of `exp(-|x|^2) P_k`:
/// `A = e^{x0^2-r^2} sum_j C(N,j) (-2)^{-j} D_r(j)[cos(2 x0 r)]`, and `B` the
/// same with `D^r(j)[sin(2 x0 r)]`.
pub fn hermite_gf_closed(m: usize, k: usize, pk: &CliffordPolynomial) -> Result<FtResult> {
    let n = radial_order(m, k)?;
    let arg = Expression::real(2.0) * Expression::x0() * Expression::r();
    let (cos, sin) = (Expression::cos(arg.clone()), Expression::sin(arg));
    let weight = |j: usize| {
        let c = binomial(n as u64, j as u64).to_f64().unwrap_or(f64::INFINITY) * (-2.0f64).powi(-(j as i32));
        Expression::real(c)
    };
    let gauss = Expression::exp(Expression::x0().powf(2.0) - Expression::r().powf(2.0));
    let a = gauss.clone() * Expression::sum((0..=n).map(|j| weight(j) * d_r_closed(j, &cos)));
    let b = gauss * Expression::sum((0..=n).map(|j| weight(j) * d_r_upper_closed(j, &sin)));
    FtResult::new(m, k, a, b, pk.clone())
}

/// `Q_n^{(beta)}`, defined by `Q_0 = 1` and
/// `Q_{n+1} = 2 (beta - n) z Q_n + (1 + z^2) Q_n'`.
#[derive(Debug, Clone, PartialEq)]
pub struct QPoly {
    pub n: usize,
    pub beta: Q,
    pub poly: UPoly<Q>,
}

pub fn q_poly(n: usize, beta: &Q) -> QPoly {
    let z = UPoly::<Q>::variable();
    let one_plus_z2 = UPoly::new(vec![qi(1), qi(0), qi(1)]);
    let mut poly = UPoly::constant(qi(1));
    for j in 0..n {
        let lin = Algebra::scale(&z, &((beta - qi(j as i64)) * qi(2)));
        poly = Algebra::add(&Algebra::mul(&lin, &poly), &Algebra::mul(&one_plus_z2, &poly.derivative()));
    }
    QPoly { n, beta: beta.clone(), poly }
}

impl QPoly {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.poly.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + q_to_f64(c))
    }

    /// `sum_j c_j arg^j` as an expression.
    pub fn to_expression(&self, arg: &Expression) -> Expression {
        Expression::sum(
            self.poly
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| Expression::real(q_to_f64(c)) * arg.powf(j as f64)),
        )
    }
}

fn check_alpha(alpha: &Q, n: usize) -> Result<()> {
    if alpha.is_integer() && alpha.is_negative() && alpha.abs() <= qi(n as i64) {
        return Err(Error::ForbiddenAlpha(q_to_f64(alpha)));
    }
    Ok(())
}

/// `(-2)^N (2k+m-1)!! prod_{j=1}^N (alpha + j)`: the factor linking
/// `Ft[(1+z^2)^{alpha+N}, P_k]` to the CK-extension of `(1-|x|^2)^alpha P_k`.
pub fn gegenbauer_reduction_constant(alpha: &Q, m: usize, k: usize) -> Result<Q> {
    let n = radial_order(m, k)?;
    check_alpha(alpha, n)?;
    let prod: Q = (1..=n).map(|j| alpha + qi(j as i64)).product();
    Ok(int(-2).pow(n as i32) * dfq((2 * k + m - 1) as i64) * prod)
}

fn minus_i_pow(p: usize) -> Complex64 {
    Complex64::new(0.0, -1.0).powi(p as i32)
}

/// `a_n = (-i)^n (2N-n-1)! / ((2N-2n)!! (n-1)!)`, `1 <= n <= N`, where `2N = 2k+m-1`.
pub fn gegenbauer_a_coeff(n: usize, big_n: usize) -> Complex64 {
    let c = Q::new(
        factorial((2 * big_n - n - 1) as u64),
        double_factorial((2 * big_n - 2 * n) as i64) * factorial((n - 1) as u64),
    );
    minus_i_pow(n) * q_to_f64(&c)
}

/// `b_n = (-i)^{n+1} (2N-n)! / ((2N-2n)!! n!)`, `0 <= n <= N`.
pub fn gegenbauer_b_coeff(n: usize, big_n: usize) -> Complex64 {
    let c = Q::new(factorial((2 * big_n - n) as u64), double_factorial((2 * big_n - 2 * n) as i64) * factorial(n as u64));
    minus_i_pow(n + 1) * q_to_f64(&c)
}

/// `M = 2^{N+1} prod_{n=1}^N (alpha + n)`.
pub fn gegenbauer_prefactor(alpha: &Q, m: usize, k: usize) -> Result<Q> {
    let big_n = radial_order(m, k)?;
    check_alpha(alpha, big_n)?;
    Ok(Q::from_integer(BigInt::one() << (big_n + 1)) * (1..=big_n).map(|n| alpha + qi(n as i64)).product::<Q>())
}

/// CK-extension of `(1-|x|^2)^alpha P_k`, built from
/// `F_n(w) = (1 + w^2)^{beta-n} Q_n^{(beta)}(w)` at `Z = x0 + i r` and its
/// conjugate, `beta = alpha + N`.
pub fn gegenbauer_gf_closed(m: usize, k: usize, alpha: &Q, pk: &CliffordPolynomial) -> Result<FtResult> {
    let big_n = radial_order(m, k)?;
    check_alpha(alpha, big_n)?;
    let beta = alpha + qi(big_n as i64);
    let beta_f = q_to_f64(&beta);
    let prefactor = gegenbauer_prefactor(alpha, m, k)?;
    let inv_pref = Complex64::new(1.0 / q_to_f64(&prefactor), 0.0);
    let f = |n: usize, w: &Expression| {
        let base = Expression::one() + w.powf(2.0);
        base.powf(beta_f - n as f64) * q_poly(n, &beta).to_expression(w)
    };
    let (zz, zb) = (Expression::z(), Expression::z_bar());
    let pair = |n: usize, sign: f64| f(n, &zz) + f(n, &zb).scale(Complex64::new(sign, 0.0));
    let r_pow = |n: usize| Expression::r().powf(n as f64 - 2.0 * big_n as f64);
    let a = Expression::sum((1..=big_n).map(|n| {
        r_pow(n).scale(gegenbauer_a_coeff(n, big_n)) * pair(n, minus_one_pow(n as i64) as f64)
    }));
    let b = Expression::sum((0..=big_n).map(|n| {
        r_pow(n).scale(gegenbauer_b_coeff(n, big_n)) * pair(n, minus_one_pow(n as i64 + 1) as f64)
    }));
    FtResult::new(m, k, a.scale(inv_pref), b.scale(inv_pref), pk.clone())
}

/// Max norm of `(d/dx0 + sum_j e_j d/dx_j) f` over `points`, by central
/// differences with step `h`.
pub fn monogenicity_residual(f: &FtResult, points: &[(f64, Vec<f64>)], h: f64) -> Result<f64> {
    // five-point central stencil: (-f(+2h) + 8 f(+h) - 8 f(-h) + f(-2h)) / 12h
    const STENCIL: [(f64, f64); 4] = [(2.0, -1.0), (1.0, 8.0), (-1.0, -8.0), (-2.0, 1.0)];
    let mut max = 0.0f64;
    for (x0, x) in points {
        let mut acc = Multivector::zero(x.len());
        for (step, w) in STENCIL {
            acc = acc.add(&f.eval(x0 + step * h, x)?.scale(&w));
        }
        for j in 0..x.len() {
            let mut d = Multivector::zero(x.len());
            for (step, w) in STENCIL {
                let mut xs = x.clone();
                xs[j] += step * h;
                d = d.add(&f.eval(*x0, &xs)?.scale(&w));
            }
            acc = acc.add(&d.left_mul_generator(j + 1));
        }
        max = crate::report::worst(max, acc.max_norm() / (12.0 * h));
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::parse;
    use crate::scalar::q;

    fn one(m: usize) -> CliffordPolynomial {
        CliffordPolynomial::one(m)
    }

    #[test]
    fn z_squared_is_constant() {
        let f = ft_transform(&parse("z^2").unwrap(), &one(3), 3, 0).unwrap();
        for (x0, r) in [(0.0, 1.0), (0.7, 0.3), (-2.0, 5.0)] {
            let (a, b) = f.eval_parts(x0, r).unwrap();
            assert!((a + 4.0).abs() < 1e-12 && b.abs() < 1e-12, "{a} {b}");
        }
        let c = ft_transform(&parse("1").unwrap(), &one(3), 3, 0).unwrap();
        assert_eq!(c.eval_parts(0.3, 0.4).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn even_dimension_rejected() {
        assert_eq!(ft_transform(&parse("z").unwrap(), &one(4), 4, 0).unwrap_err(), Error::EvenDimension(4));
        assert_eq!(hermite_gf_closed(2, 0, &one(2)).unwrap_err(), Error::EvenDimension(2));
    }

    #[test]
    fn non_monogenic_pk_rejected() {
        let x1 = CliffordPolynomial::coordinate(1, 3);
        assert_eq!(ft_transform(&parse("z").unwrap(), &x1, 3, 1).unwrap_err(), Error::NotMonogenic);
    }

    #[test]
    fn exp_z2_at_origin_slice() {
        let f = ft_transform(&parse("exp(z^2)").unwrap(), &one(3), 3, 0).unwrap();
        let (a, b) = f.eval_parts(0.0, 1.0).unwrap();
        assert!((a + 4.0 * (-1.0f64).exp()).abs() < 1e-12);
        assert!(b.abs() < 1e-12);
    }

    #[test]
    fn monomial_constants_spot_values() {
        let c = ft_monomial(2, MonomialKind::Power, 3, 0).unwrap();
        assert_eq!(c.constant, qi(-4));
        assert_eq!(c.seed, Seed { x_power: 0, inv_r: false });
        assert_eq!(ft_monomial(1, MonomialKind::Power, 3, 0).unwrap().constant, qi(0));
        assert_eq!(ft_monomial(2, MonomialKind::IPower, 3, 0).unwrap().constant, qi(-2));
        assert_eq!(ft_monomial(0, MonomialKind::InversePower, 3, 0).unwrap().constant, qi(0));
        assert_eq!(ft_monomial(0, MonomialKind::IInversePower, 3, 0).unwrap().constant, qi(2));
    }

    #[test]
    fn monomial_images_match_transform_m3() {
        let x = [0.3, -0.5, 0.6];
        let pk = one(3).to_numeric();
        for kind in MonomialKind::ALL {
            for n in 0..7 {
                let f = ft_transform(&kind.expression(n), &one(3), 3, 0).unwrap();
                let got = f.eval(0.0, &x).unwrap();
                let want = ft_monomial(n, kind, 3, 0).unwrap().eval(&x, &pk);
                assert!(got.sub(&want).max_norm() < 1e-10 * (1.0 + want.max_norm()), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn seed_negative_powers() {
        let x = [0.0, 2.0, 0.0];
        // x^{-1} = -x / r^2
        let v = Seed { x_power: -1, inv_r: false }.eval(&x);
        assert!((v.coefficient(0b10) + 0.5).abs() < 1e-15);
        let s = Seed { x_power: -2, inv_r: true }.eval(&x);
        assert!((s.scalar_part() + 0.125).abs() < 1e-15);
    }

    #[test]
    fn hermite_closed_at_origin_slice() {
        let f = hermite_gf_closed(5, 1, &crate::mvpoly::monogenic_generators(5, 1).unwrap().elements()[0]).unwrap();
        for r in [0.3, 1.0, 1.7] {
            let (a, b) = f.eval_parts(0.0, r).unwrap();
            assert!((a - (-r * r).exp()).abs() < 1e-12);
            assert!(b.abs() < 1e-12);
        }
    }

    #[test]
    fn q_poly_small_degrees() {
        let b = q(3, 2);
        assert_eq!(q_poly(0, &b).poly, UPoly::constant(qi(1)));
        assert_eq!(q_poly(1, &b).poly, UPoly::new(vec![qi(0), qi(3)]));
        // (4b^2 - 2b) z^2 + 2b
        assert_eq!(q_poly(2, &b).poly, UPoly::new(vec![qi(3), qi(0), qi(6)]));
    }

    #[test]
    fn reduction_constant_values() {
        let a = q(1, 2);
        assert_eq!(gegenbauer_reduction_constant(&a, 3, 0).unwrap(), qi(-4) * (a.clone() + qi(1)));
        assert_eq!(gegenbauer_reduction_constant(&a, 3, 1).unwrap(), qi(32) * (a.clone() + qi(1)) * (a + qi(2)));
        assert!(matches!(gegenbauer_reduction_constant(&qi(-1), 3, 0), Err(Error::ForbiddenAlpha(_))));
        assert!(gegenbauer_reduction_constant(&qi(-2), 3, 0).is_ok());
    }

    #[test]
    fn gegenbauer_closed_at_origin_slice() {
        let f = gegenbauer_gf_closed(3, 0, &q(3, 2), &one(3)).unwrap();
        let (a, b) = f.eval_parts(0.0, 0.6).unwrap();
        assert!((a - 0.512).abs() < 1e-12, "{a}");
        assert!(b.abs() < 1e-12);
    }

    #[test]
    fn residual_detects_non_monogenic() {
        let f = FtResult::new(3, 0, Expression::x0(), Expression::zero(), one(3)).unwrap();
        let pts = vec![(0.1, vec![0.2, 0.3, 0.4])];
        assert!((monogenicity_residual(&f, &pts, 1e-4).unwrap() - 1.0).abs() < 1e-8);
        let g = hermite_gf_closed(3, 0, &one(3)).unwrap();
        assert!(monogenicity_residual(&g, &pts, 1e-4).unwrap() < 1e-6);
    }
}
