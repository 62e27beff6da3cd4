//! Laguerre and Jacobi sum identities that fall out of the closed-form
//! generating functions: finite sums of radial-operator images on the left,
//! truncated classical series on the right.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::classical::{binomial, jacobi, laguerre, pochhammer};
use crate::error::{Error, Result};
use crate::fueter::{gegenbauer_a_coeff, gegenbauer_b_coeff, gegenbauer_prefactor, q_poly, radial_order};
use crate::radial::{complex_pow, d_r_compose, d_r_upper_compose, Expression};
use crate::scalar::{q_from_f64, q_to_f64, Q};

/// Left and right side of one identity at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
}

/// Finite radial sums `sum_n C(N,n) (-2)^{-n} D_r(n)[cos(2 x0 r)]` and the
/// `D^r`/`sin` analogue, built once per `(m, k)`.
#[derive(Debug, Clone)]
pub struct LaguerreSums {
    m: usize,
    k: usize,
    cos_sum: Expression,
    sin_sum: Expression,
}

impl LaguerreSums {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        let n = radial_order(m, k)?;
        let arg = Expression::real(2.0) * Expression::x0() * Expression::r();
        let (cos, sin) = (Expression::cos(arg.clone()), Expression::sin(arg));
        let w = |j: usize| {
            Expression::real(binomial(n as u64, j as u64).to_f64().unwrap_or(f64::NAN) * (-2.0f64).powi(-(j as i32)))
        };
        let cos_sum = Expression::sum((0..=n).map(|j| w(j) * d_r_compose(j, &cos)));
        let sin_sum = Expression::sum((0..=n).map(|j| w(j) * d_r_upper_compose(j, &sin)));
        Ok(LaguerreSums { m, k, cos_sum, sin_sum })
    }

    /// Identities (i) and (ii) at `(x0, r)` with `terms` series terms.
    pub fn eval(&self, x0: f64, r: f64, terms: usize) -> Result<[Sides; 2]> {
        let lhs_i = self.cos_sum.eval(x0, r)?.re;
        let lhs_ii = self.sin_sum.eval(x0, r)?.re;
        let half_m = self.m as f64 / 2.0;
        let (a_even, a_odd) = (self.k as f64 + half_m - 1.0, self.k as f64 + half_m);
        let t = r * r;
        // 2^{2n} n! / (2n)! and 2^{2n+1} n! / (2n+1)!
        let (mut ce, mut co) = (1.0, 2.0);
        let (mut se, mut so) = (0.0, 0.0);
        let x2 = x0 * x0;
        let mut xp = 1.0;
        for n in 0..terms {
            se += ce * xp * laguerre(n, &a_even, &t);
            so += co * xp * x0 * r * laguerre(n, &a_odd, &t);
            ce *= 2.0 / (2 * n + 1) as f64;
            co *= 2.0 / (2 * n + 3) as f64;
            xp *= x2;
        }
        let g = (-x2).exp();
        Ok([Sides { lhs: lhs_i, rhs: g * se }, Sides { lhs: lhs_ii, rhs: g * so }])
    }
}

/// The Jacobi identities for `(1 - |x|^2)^alpha`, with the constant
/// `M = 2^{N+1} prod_{n=1}^N (alpha + n)`.
#[derive(Debug, Clone)]
pub struct JacobiSums {
    m: usize,
    k: usize,
    alpha: f64,
    big_n: usize,
    beta: Q,
    constant: f64,
}

impl JacobiSums {
    pub fn new(m: usize, k: usize, alpha: f64) -> Result<Self> {
        let big_n = radial_order(m, k)?;
        let qa = q_from_f64(alpha).ok_or_else(|| Error::Domain(format!("alpha = {alpha} is not finite")))?;
        let constant = q_to_f64(&gegenbauer_prefactor(&qa, m, k)?);
        let beta = qa + Q::from_integer((big_n as i64).into());
        Ok(JacobiSums { m, k, alpha, big_n, beta, constant })
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    fn f(&self, n: usize, w: Complex64) -> Result<Complex64> {
        let p = q_to_f64(&self.beta) - n as f64;
        Ok(complex_pow(Complex64::new(1.0, 0.0) + w * w, p)? * q_poly(n, &self.beta).eval(w))
    }

    /// Identities (i) and (ii) at `(x0, r)`, `0 < r < 1`, with `terms`
    /// series terms.
    pub fn eval(&self, x0: f64, r: f64, terms: usize) -> Result<[Sides; 2]> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("r = {r} must lie in (0, 1)")));
        }
        let z = Complex64::new(x0, r);
        let zb = z.conj();
        let mut lhs_i = Complex64::new(0.0, 0.0);
        for n in 1..=self.big_n {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let pair = self.f(n, z)? + self.f(n, zb)? * sign;
            lhs_i += gegenbauer_a_coeff(n, self.big_n) * pair / r.powi((2 * self.big_n - n) as i32);
        }
        let mut lhs_ii = Complex64::new(0.0, 0.0);
        for n in 0..=self.big_n {
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            let pair = self.f(n, z)? + self.f(n, zb)? * sign;
            lhs_ii += gegenbauer_b_coeff(n, self.big_n) * pair / r.powi((2 * self.big_n - n) as i32);
        }
        let half_m = self.m as f64 / 2.0;
        let (a_even, a_odd) = (self.k as f64 + half_m - 1.0, self.k as f64 + half_m);
        let (t, x2) = (r * r, x0 * x0);
        let s = 1.0 - 2.0 * t;
        let (mut ce, mut co) = (1.0, 2.0);
        let (mut se, mut so) = (0.0, 0.0);
        let mut xp = 1.0;
        for n in 0..terms {
            let nf = n as f64;
            let be = self.alpha - 2.0 * nf;
            let bo = self.alpha - 2.0 * nf - 1.0;
            se += ce * pochhammer(&(self.alpha - nf + 1.0), n) * xp * (1.0 - t).powf(be) * jacobi(n, &a_even, &be, &s);
            so += co * pochhammer(&(self.alpha - nf), n + 1) * xp * x0 * (1.0 - t).powf(bo) * r * jacobi(n, &a_odd, &bo, &s);
            ce *= 2.0 / (2 * n + 1) as f64;
            co *= 2.0 / (2 * n + 3) as f64;
            xp *= x2;
        }
        let m = self.constant;
        Ok([Sides { lhs: lhs_i.re, rhs: m * se }, Sides { lhs: lhs_ii.re, rhs: m * so }])
    }
}
