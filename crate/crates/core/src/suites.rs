//! Identity suites. Each suite checks one family of identities and returns
//! one [`VerificationReport`] per instance; `Err` is reserved for bad
//! parameters (even `m`, excluded `alpha`, ...), numeric trouble at a point
//! is reported inside the failing instance.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ckseries::{ck_gegenbauer_series, ck_generic, ck_hermite_series};
use crate::classical::{bessel_poly_coeffs, double_factorial, gegenbauer, jacobi, laguerre, minus_one_pow};
use crate::clifford::Multivector;
use crate::corollary::{JacobiSums, LaguerreSums};
use crate::error::{Error, Result};
use crate::fueter::{
    ft_monomial, ft_transform, gegenbauer_gf_closed, gegenbauer_reduction_constant, hermite_gf_closed,
    monogenicity_residual, q_poly, radial_order, FtResult, MonomialKind,
};
use crate::grid::{lift, Grid};
use crate::mvpoly::{
    apply_d_plus, explicit_gegenbauer, explicit_hermite, gegenbauer_operator, monogenic_basis, monogenic_generators,
    CliffordPolynomial,
};
use crate::radial::{
    a_coeff, b_coeff, d_r_closed, d_r_compose, d_r_upper_closed, d_r_upper_compose, leibniz_d_r, leibniz_d_r_upper,
    parse, Expression, RadialCoeffTable, RadialKind, Var,
};
use crate::report::{scaled_error, scaled_error_mv, worst, Params, VerificationReport};
use crate::scalar::{q_from_f64, q_to_f64, qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Operators,
    Coeffs,
    Leibniz,
    Lemma1,
    Thm1,
    Thm2,
    Thm3,
    Corollary3,
    Corollary4,
    ClassicalGf,
    Monogenicity,
    Qpoly,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Operators,
        Suite::Coeffs,
        Suite::Leibniz,
        Suite::Lemma1,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Corollary3,
        Suite::Corollary4,
        Suite::ClassicalGf,
        Suite::Monogenicity,
        Suite::Qpoly,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Coeffs => "coeffs",
            Suite::Leibniz => "leibniz",
            Suite::Lemma1 => "lemma1",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Corollary3 => "corollary3",
            Suite::Corollary4 => "corollary4",
            Suite::ClassicalGf => "classical-gf",
            Suite::Monogenicity => "monogenicity",
            Suite::Qpoly => "qpoly",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::UnknownIdentifier { offset: 0, name: s.to_string() })
    }
}

/// Command-line style overrides of a suite's default parameters.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub alpha: Option<f64>,
    pub trunc: Option<usize>,
    pub tol: Option<f64>,
    pub grid: Option<Grid>,
}

impl Overrides {
    fn dims(&self, default: &[usize]) -> Vec<usize> {
        self.m.map_or_else(|| default.to_vec(), |m| vec![m])
    }

    fn degrees(&self, max: usize) -> Vec<usize> {
        self.k.map_or_else(|| (0..=max).collect(), |k| vec![k])
    }

    fn alphas(&self, default: &[f64]) -> Vec<f64> {
        self.alpha.map_or_else(|| default.to_vec(), |a| vec![a])
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn grid(&self, default: Grid) -> Grid {
        self.grid.clone().unwrap_or(default)
    }

    fn trunc(&self, default: usize) -> usize {
        self.trunc.unwrap_or(default)
    }
}

pub fn run(suite: Suite, o: &Overrides) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::Operators => operators(o),
        Suite::Coeffs => coeffs(o),
        Suite::Leibniz => leibniz(o),
        Suite::Lemma1 => lemma1(o),
        Suite::Thm1 => thm1(o),
        Suite::Thm2 => thm2(o),
        Suite::Thm3 => thm3(o),
        Suite::Corollary3 => corollary3(o),
        Suite::Corollary4 => corollary4(o),
        Suite::ClassicalGf => classical_gf(o),
        Suite::Monogenicity => monogenicity(o),
        Suite::Qpoly => qpoly(o),
    }
}

fn timed(f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let t = Instant::now();
    let r = f();
    r.with_runtime(t.elapsed().as_millis() as u64)
}

/// Runs a numeric check; an `Err` inside becomes a failed report.
fn numeric(id: &str, params: Params, grid: impl Into<String>, tol: f64, f: impl FnOnce() -> Result<f64>) -> VerificationReport {
    let grid = grid.into();
    timed(|| match f() {
        Ok(err) => VerificationReport::numeric(id, params, grid, err, tol),
        Err(e) => VerificationReport::failed(id, params, grid, tol, &e),
    })
}

fn check_odd(ms: &[usize], ks: &[usize]) -> Result<()> {
    for &m in ms {
        for &k in ks {
            radial_order(m, k)?;
        }
    }
    Ok(())
}

fn exact_alpha(a: f64) -> Result<Q> {
    q_from_f64(a).ok_or_else(|| Error::Domain(format!("alpha = {a} is not finite")))
}

/// Full real basis for `m <= 3`, right-module generators above.
fn pk_basis(m: usize, k: usize) -> Result<(Vec<CliffordPolynomial>, &'static str)> {
    if m <= 3 {
        Ok((monogenic_basis(m, k)?.elements().to_vec(), "full"))
    } else {
        Ok((monogenic_generators(m, k)?.elements().to_vec(), "generators"))
    }
}

fn generators(m: usize, k: usize) -> Result<Vec<CliffordPolynomial>> {
    Ok(monogenic_generators(m, k)?.elements().to_vec())
}

fn hermite_grid() -> Grid {
    Grid::new((-1.0, 1.0, 11), (0.2, 2.0, 10))
}

fn gegenbauer_grid() -> Grid {
    Grid::new((-0.3, 0.3, 7), (0.2, 0.8, 7))
}

const GEGENBAUER_ALPHAS: [f64; 4] = [0.5, 1.5, 2.0, -0.3];

/// Max scaled multivector deviation between two evaluators over `points`.
fn compare(
    points: &[(f64, Vec<f64>)],
    lhs: impl Fn(f64, &[f64]) -> Result<Multivector<f64>>,
    rhs: impl Fn(f64, &[f64]) -> Result<Multivector<f64>>,
) -> Result<f64> {
    let mut e = 0.0f64;
    for (x0, x) in points {
        e = worst(e, scaled_error_mv(&lhs(*x0, x)?, &rhs(*x0, x)?));
    }
    Ok(e)
}

fn compare_parts(
    points: &[(f64, f64)],
    lhs: impl Fn(f64, f64) -> Result<(f64, f64)>,
    rhs: impl Fn(f64, f64) -> Result<(f64, f64)>,
) -> Result<f64> {
    let mut e = 0.0f64;
    for &(x0, r) in points {
        let (a, b) = lhs(x0, r)?;
        let (c, d) = rhs(x0, r)?;
        e = worst(e, worst(scaled_error(a, c), scaled_error(b, d)));
    }
    Ok(e)
}

// ---------------------------------------------------------------- operators

fn operators(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3, 5, 7]);
    let ks = o.degrees(3);
    let alphas = o.alphas(&[-0.5, 0.5, 1.0, 3.0]);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let (basis, kind) = pk_basis(m, k)?;
            let params = || Params::new().with("m", m).with("k", k).with("basis", kind).with("basis_len", basis.len());
            out.push(timed(|| {
                let mut bad = 0;
                let explicit = (0..=8).map(|n| explicit_hermite(n, m, k)).collect::<Result<Vec<_>>>();
                match explicit {
                    Ok(explicit) => {
                        for p in &basis {
                            let mut h = p.clone();
                            for e in &explicit {
                                bad += usize::from(h != e.mul(p));
                                h = apply_d_plus(&h);
                            }
                        }
                        VerificationReport::exact("hermite-explicit", params().with("n_max", 8), "", bad)
                    }
                    Err(e) => VerificationReport::failed("hermite-explicit", params(), "", 0.0, &e),
                }
            }));
            for &alpha in &alphas {
                let a = exact_alpha(alpha)?;
                out.push(timed(|| {
                    let p = params().with("alpha", alpha).with("n_max", 6);
                    let mut bad = 0;
                    for n in 0..=6 {
                        let e = match explicit_gegenbauer(n, m, k, &a) {
                            Ok(e) => e,
                            Err(err) => return VerificationReport::failed("gegenbauer-explicit", p, "", 0.0, &err),
                        };
                        for pk in &basis {
                            match gegenbauer_operator(n, &a, pk) {
                                Ok(g) => bad += usize::from(g != e.mul(pk)),
                                Err(err) => {
                                    return VerificationReport::failed("gegenbauer-explicit", p, "", 0.0, &err)
                                }
                            }
                        }
                    }
                    VerificationReport::exact("gegenbauer-explicit", p, "", bad)
                }));
            }
        }
    }
    Ok(out)
}

// ------------------------------------------------------------ coefficients

/// A random expression in `x0`, `r` built from the DSL's pieces.
pub fn random_expression(rng: &mut ChaCha8Rng, depth: usize) -> Expression {
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..5) {
        0 => Expression::real(rng.gen_range(-2.0..2.0)),
        1 => Expression::x0(),
        2 => Expression::r(),
        3 => Expression::z(),
        _ => Expression::r().powf(-(rng.gen_range(1..3) as f64)),
    };
    if depth == 0 {
        return leaf(rng);
    }
    let scaled = |rng: &mut ChaCha8Rng, e: Expression| Expression::real(rng.gen_range(-1.0..1.0)) * e;
    match rng.gen_range(0..7) {
        0 => random_expression(rng, depth - 1) + random_expression(rng, depth - 1),
        1 | 2 => random_expression(rng, depth - 1) * random_expression(rng, depth - 1),
        3 => {
            let e = random_expression(rng, depth - 1);
            Expression::exp(scaled(rng, e))
        }
        4 => {
            let e = random_expression(rng, depth - 1);
            Expression::cos(scaled(rng, e))
        }
        5 => {
            let e = random_expression(rng, depth - 1);
            Expression::sin(scaled(rng, e))
        }
        _ => random_expression(rng, depth - 1).powf(rng.gen_range(2..4) as f64),
    }
}

fn random_points(rng: &mut ChaCha8Rng, count: usize, r_min: f64) -> Vec<(f64, f64)> {
    (0..count).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(r_min..2.0))).collect()
}

fn coeffs(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    out.push(timed(|| {
        let mut bad = 0;
        for n in 0..=15 {
            for kind in [RadialKind::Lower, RadialKind::Upper] {
                bad += usize::from(RadialCoeffTable::recursive(kind, n) != RadialCoeffTable::closed(kind, n));
            }
        }
        VerificationReport::exact("coeff-recursion", Params::new().with("n_max", 15), "", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for n in 0..=10usize {
            let bessel = bessel_poly_coeffs(n);
            for j in 0..=n {
                let b = b_coeff(j, n).expect("in range") * qi(minus_one_pow((n + j) as i64));
                bad += usize::from(b != Q::from_integer(bessel[n - j].clone()));
            }
        }
        VerificationReport::exact("coeff-bessel", Params::new().with("n_max", 10), "", bad)
    }));
    out.push(timed(|| {
        let bad = (1..=15usize).map(|n| usize::from(a_coeff(n, n).ok() != Some(qi(1)))).sum();
        VerificationReport::exact("coeff-diagonal", Params::new().with("n_max", 15), "", bad)
    }));
    let tol = o.tol(1e-9);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..8 {
        let e = random_expression(&mut rng, 3);
        let points = random_points(&mut rng, 10, 0.5);
        let params = || Params::new().with("expression", e.to_string()).with("case", case).with("n_max", 6);
        out.push(numeric("closed-vs-composed", params(), "random x0 in [-1,1], r in [0.5,2]", tol, || {
            let mut err = 0.0f64;
            for n in 0..=6 {
                let pairs = [(d_r_closed(n, &e), d_r_compose(n, &e)), (d_r_upper_closed(n, &e), d_r_upper_compose(n, &e))];
                for (a, b) in pairs {
                    for &(x0, r) in &points {
                        let (va, vb) = (a.eval(x0, r)?, b.eval(x0, r)?);
                        err = worst(err, (va - vb).norm() / vb.norm().max(1.0));
                    }
                }
            }
            Ok(err)
        }));
    }
    Ok(out)
}

// ----------------------------------------------------------------- leibniz

fn leibniz(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let tol = o.tol(1e-9);
    let mut out = Vec::new();
    let gauss = parse("exp(x0^2 - r^2)").expect("valid");
    out.push(timed(|| {
        let bad = (0..=6)
            .filter(|&n| d_r_compose(n, &gauss) != gauss.scale(Complex64::new((-2.0f64).powi(n as i32), 0.0)))
            .count();
        VerificationReport::exact("gaussian-eigenfunction", Params::new().with("n_max", 6), "", bad)
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..6 {
        let f = random_expression(&mut rng, 2);
        let g = random_expression(&mut rng, 2);
        let points = random_points(&mut rng, 8, 1.0);
        let params = Params::new().with("f", f.to_string()).with("g", g.to_string()).with("n_max", 6);
        out.push(numeric("leibniz", params, "random x0 in [-1,1], r in [1,2]", tol, || {
            let fg = f.clone() * g.clone();
            let mut err = 0.0f64;
            for n in 0..=6 {
                let pairs = [(leibniz_d_r(n, &f, &g), d_r_compose(n, &fg)), (leibniz_d_r_upper(n, &f, &g), d_r_upper_compose(n, &fg))];
                for (a, b) in pairs {
                    for &(x0, r) in &points {
                        let (va, vb) = (a.eval(x0, r)?, b.eval(x0, r)?);
                        err = worst(err, (va - vb).norm() / vb.norm().max(1.0));
                    }
                }
            }
            Ok(err)
        }));
    }
    Ok(out)
}

// ------------------------------------------------------------------ lemma1

fn lemma1(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3, 5]);
    let ks = o.degrees(2);
    check_odd(&ms, &ks)?;
    let tol = o.tol(1e-8);
    let r_axis = o.grid.as_ref().map_or((0.5, 2.0, 16), |g| (g.r.start, g.r.stop, g.r.count));
    let grid = Grid::new((0.0, 0.0, 1), r_axis);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let gens = generators(m, k)?;
            let points = lift(&grid.points(), m, 5);
            for kind in MonomialKind::ALL {
                let params = Params::new().with("m", m).with("k", k).with("variant", format!("{kind:?}")).with("n_max", 12);
                out.push(numeric("lemma1", params, grid.to_string(), tol, || {
                    let mut err = 0.0f64;
                    for n in 0..=12 {
                        let image = ft_monomial(n, kind, m, k)?;
                        let f = ft_transform(&kind.expression(n), &gens[0], m, k)?;
                        for pk in &gens {
                            let f = f.with_pk(pk)?;
                            let pn = pk.to_numeric();
                            err = worst(err, compare(&points, |x0, x| f.eval(x0, x), |_, x| Ok(image.eval(x, &pn)))?);
                        }
                    }
                    Ok(err)
                }));
            }
            let params = Params::new().with("m", m).with("k", k).with("h1", "exp(z^2)").with("h2", "z^5");
            let lin_grid = Grid::new((-1.0, 1.0, 5), (0.3, 2.0, 5));
            let lin_points = lift(&lin_grid.points(), m, 6);
            out.push(numeric("ft-linearity", params, lin_grid.to_string(), o.tol(1e-9), || {
                let (h1, h2) = (parse("exp(z^2)")?, parse("z^5")?);
                let (c1, c2) = (Complex64::new(1.5, 0.0), Complex64::new(-0.25, 0.0));
                let combined = ft_transform(&(h1.scale(c1) + h2.scale(c2)), &gens[0], m, k)?;
                let (f1, f2) = (ft_transform(&h1, &gens[0], m, k)?, ft_transform(&h2, &gens[0], m, k)?);
                compare(&lin_points, |x0, x| combined.eval(x0, x), |x0, x| {
                    Ok(f1.eval(x0, x)?.scale(&c1.re).add(&f2.eval(x0, x)?.scale(&c2.re)))
                })
            }));
        }
    }
    Ok(out)
}

// -------------------------------------------------------------------- thm1

/// The closed form displayed for `m = 3`, `P_k = 1`.
pub fn hermite_reference_m3() -> FtResult {
    let a = parse("exp(x0^2 - r^2)*(cos(2*x0*r) + x0*r^(-1)*sin(2*x0*r))").expect("valid");
    let b = parse("exp(x0^2 - r^2)*(sin(2*x0*r) + 0.5*sin(2*x0*r)*r^(-2) - x0*r^(-1)*cos(2*x0*r))").expect("valid");
    FtResult::new(3, 0, a, b, CliffordPolynomial::one(3)).expect("m = 3 is odd")
}

fn thm1(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3, 5]);
    let ks = o.degrees(2);
    check_odd(&ms, &ks)?;
    let grid = o.grid(hermite_grid());
    let trunc = o.trunc(30);
    let tol = o.tol(1e-9);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let gens = generators(m, k)?;
            let points = lift(&grid.points(), m, 7);
            let n = radial_order(m, k)?;
            let scale = (-2.0f64).powi(n as i32) * double_factorial((2 * k + m - 1) as i64).to_f64().unwrap_or(f64::NAN);
            let params = || Params::new().with("m", m).with("k", k).with("generators", gens.len());
            out.push(numeric("thm1-ft", params().with("scale", scale), grid.to_string(), tol, || {
                let ft = ft_transform(&parse("exp(z^2)")?, &gens[0], m, k)?;
                let closed = hermite_gf_closed(m, k, &gens[0])?.scaled(scale);
                let mut err = 0.0f64;
                for pk in &gens {
                    let (ft, closed) = (ft.with_pk(pk)?, closed.with_pk(pk)?);
                    err = worst(err, compare(&points, |x0, x| ft.eval(x0, x), |x0, x| closed.eval(x0, x))?);
                }
                Ok(err)
            }));
            out.push(numeric("thm1-series", params().with("trunc", trunc), grid.to_string(), tol, || {
                let closed = hermite_gf_closed(m, k, &gens[0])?;
                let mut err = 0.0f64;
                for pk in &gens {
                    let (closed, series) = (closed.with_pk(pk)?, ck_hermite_series(pk, trunc)?);
                    err = worst(err, compare(&points, |x0, x| closed.eval(x0, x), |x0, x| series.eval(x0, x))?);
                }
                Ok(err)
            }));
            if m == 3 && k == 0 {
                out.push(numeric("thm1-reference", params(), grid.to_string(), o.tol(1e-12), || {
                    let closed = hermite_gf_closed(3, 0, &CliffordPolynomial::one(3))?;
                    let reference = hermite_reference_m3();
                    compare_parts(&grid.points(), |x0, r| closed.eval_parts(x0, r), |x0, r| reference.eval_parts(x0, r))
                }));
            }
        }
    }
    Ok(out)
}

// --------------------------------------------------------------- thm2/thm3

/// The closed form displayed for `m = 3`, `P_k = 1`, as a function of `alpha`.
pub fn gegenbauer_reference_m3(alpha: f64) -> Result<FtResult> {
    let zb = "(x0 - i*r)";
    let a = parse(&format!("(-0.5*i)*r^(-1)*(z*(1 + z^2)^({alpha}) - {zb}*(1 + {zb}^2)^({alpha}))"))?;
    let c = 1.0 / (2.0 * (alpha + 1.0));
    let a1 = alpha + 1.0;
    let b = parse(&format!(
        "(-0.5)*r^(-1)*(z*(1 + z^2)^({alpha}) + {zb}*(1 + {zb}^2)^({alpha}) + ({c}*i)*r^(-1)*((1 + z^2)^({a1}) - (1 + {zb}^2)^({a1})))"
    ))?;
    FtResult::new(3, 0, a, b, CliffordPolynomial::one(3))
}

fn gegenbauer_input(alpha: f64, n: usize) -> Expression {
    (Expression::one() + Expression::z().powf(2.0)).powf(alpha + n as f64)
}

fn thm2(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3]);
    let ks = o.degrees(1);
    check_odd(&ms, &ks)?;
    let grid = o.grid(gegenbauer_grid());
    let trunc = o.trunc(25);
    let tol = o.tol(1e-8);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let gens = generators(m, k)?;
            let points = lift(&grid.points(), m, 8);
            let n = radial_order(m, k)?;
            for alpha in o.alphas(&GEGENBAUER_ALPHAS) {
                let a = exact_alpha(alpha)?;
                let constant = q_to_f64(&gegenbauer_reduction_constant(&a, m, k)?);
                let params = || Params::new().with("m", m).with("k", k).with("alpha", alpha).with("constant", constant);
                let ft = ft_transform(&gegenbauer_input(alpha, n), &gens[0], m, k)?;
                out.push(numeric("thm2-series", params().with("trunc", trunc), grid.to_string(), tol, || {
                    let mut err = 0.0f64;
                    for pk in &gens {
                        let (ft, series) = (ft.with_pk(pk)?, ck_gegenbauer_series(pk, alpha, trunc)?);
                        err = worst(err, compare(&points, |x0, x| ft.eval(x0, x), |x0, x| Ok(series.eval(x0, x)?.scale(&constant)))?);
                    }
                    Ok(err)
                }));
                out.push(numeric("thm2-closed", params(), grid.to_string(), tol, || {
                    let closed = gegenbauer_gf_closed(m, k, &a, &gens[0])?.scaled(constant);
                    let mut err = 0.0f64;
                    for pk in &gens {
                        let (ft, closed) = (ft.with_pk(pk)?, closed.with_pk(pk)?);
                        err = worst(err, compare(&points, |x0, x| ft.eval(x0, x), |x0, x| closed.eval(x0, x))?);
                    }
                    Ok(err)
                }));
            }
        }
    }
    Ok(out)
}

fn thm3(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3]);
    let ks = o.degrees(1);
    check_odd(&ms, &ks)?;
    let grid = o.grid(gegenbauer_grid());
    let trunc = o.trunc(25);
    let tol = o.tol(1e-8);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let gens = generators(m, k)?;
            let points = lift(&grid.points(), m, 9);
            for alpha in o.alphas(&GEGENBAUER_ALPHAS) {
                let a = exact_alpha(alpha)?;
                let closed = gegenbauer_gf_closed(m, k, &a, &gens[0])?;
                let params = || Params::new().with("m", m).with("k", k).with("alpha", alpha);
                out.push(numeric("thm3-series", params().with("trunc", trunc), grid.to_string(), tol, || {
                    let mut err = 0.0f64;
                    for pk in &gens {
                        let (closed, series) = (closed.with_pk(pk)?, ck_gegenbauer_series(pk, alpha, trunc)?);
                        err = worst(err, compare(&points, |x0, x| closed.eval(x0, x), |x0, x| series.eval(x0, x))?);
                    }
                    Ok(err)
                }));
                if m == 3 && k == 0 {
                    out.push(numeric("thm3-reference", params(), grid.to_string(), o.tol(1e-10), || {
                        let reference = gegenbauer_reference_m3(alpha)?;
                        compare_parts(&grid.points(), |x0, r| closed.eval_parts(x0, r), |x0, r| reference.eval_parts(x0, r))
                    }));
                }
            }
        }
    }
    Ok(out)
}

// -------------------------------------------------------------- corollaries

/// Default grid of the Jacobi identities: the series in `x0^2` converges for
/// `|x0| < 1 - r`.
pub fn corollary4_grid() -> Grid {
    Grid::new((-0.2, 0.2, 5), (0.2, 0.5, 4))
}

fn corollary3(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3, 5]);
    let ks = o.degrees(2);
    check_odd(&ms, &ks)?;
    let grid = o.grid(hermite_grid());
    let trunc = o.trunc(30);
    let tol = o.tol(1e-9);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            let sums = LaguerreSums::new(m, k)?;
            for (idx, name) in ["i", "ii"].into_iter().enumerate() {
                let params = Params::new().with("m", m).with("k", k).with("identity", name).with("trunc", trunc);
                out.push(numeric("corollary3", params, grid.to_string(), tol, || {
                    let mut err = 0.0f64;
                    for (x0, r) in grid.points() {
                        let s = sums.eval(x0, r, trunc)?[idx];
                        err = worst(err, scaled_error(s.lhs, s.rhs));
                    }
                    Ok(err)
                }));
            }
        }
    }
    Ok(out)
}

fn corollary4(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let ms = o.dims(&[3, 5]);
    let ks = o.degrees(1);
    check_odd(&ms, &ks)?;
    let grid = o.grid(corollary4_grid());
    let trunc = o.trunc(25);
    let tol = o.tol(1e-8);
    let mut out = Vec::new();
    for &m in &ms {
        for &k in &ks {
            for alpha in o.alphas(&GEGENBAUER_ALPHAS) {
                let sums = JacobiSums::new(m, k, alpha)?;
                for (idx, name) in ["i", "ii"].into_iter().enumerate() {
                    let params = Params::new()
                        .with("m", m)
                        .with("k", k)
                        .with("alpha", alpha)
                        .with("identity", name)
                        .with("trunc", trunc)
                        .with("constant", sums.constant());
                    out.push(numeric("corollary4", params, grid.to_string(), tol, || {
                        let mut err = 0.0f64;
                        for (x0, r) in grid.points() {
                            let s = sums.eval(x0, r, trunc)?[idx];
                            err = worst(err, scaled_error(s.lhs, s.rhs));
                        }
                        Ok(err)
                    }));
                }
            }
        }
    }
    Ok(out)
}

// ------------------------------------------------------- classical families

/// `(1-t)^{-a-1} exp(-x t / (1-t))`.
pub fn laguerre_generating_function(a: f64, x: f64, t: f64) -> f64 {
    (1.0 - t).powf(-a - 1.0) * (-x * t / (1.0 - t)).exp()
}

/// `2^{a+b} R^{-1} (1 - t + R)^{-a} (1 + t + R)^{-b}`, `R = sqrt(1 - 2 x t + t^2)`.
pub fn jacobi_generating_function(a: f64, b: f64, x: f64, t: f64) -> f64 {
    let r = (1.0 - 2.0 * x * t + t * t).sqrt();
    2f64.powf(a + b) / r * (1.0 - t + r).powf(-a) * (1.0 + t + r).powf(-b)
}

fn classical_gf(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let tol = o.tol(1e-10);
    let terms = o.trunc(200);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let lag: Vec<(f64, f64, f64)> =
        (0..20).map(|_| (rng.gen_range(-0.9..4.0), rng.gen_range(0.0..5.0), rng.gen_range(-0.5..0.5))).collect();
    let jac: Vec<(f64, f64, f64, f64)> = (0..20)
        .map(|_| (rng.gen_range(-0.9..4.0), rng.gen_range(-0.9..4.0), rng.gen_range(-1.0..1.0), rng.gen_range(-0.5..0.5)))
        .collect();
    let params = |family: &str| Params::new().with("family", family).with("tuples", 20).with("terms", terms);
    let laguerre_report = numeric("classical-gf", params("laguerre"), "random a, x in [0,5], |t| <= 0.5", tol, || {
        let mut err = 0.0f64;
        for &(a, x, t) in &lag {
            let series: f64 = (0..terms).map(|n| t.powi(n as i32) * laguerre(n, &a, &x)).sum();
            err = worst(err, scaled_error(series, laguerre_generating_function(a, x, t)));
        }
        Ok(err)
    });
    let jacobi_report = numeric("classical-gf", params("jacobi"), "random a, b, x in [-1,1], |t| <= 0.5", tol, || {
        let mut err = 0.0f64;
        for &(a, b, x, t) in &jac {
            let series: f64 = (0..terms).map(|n| t.powi(n as i32) * jacobi(n, &a, &b, &x)).sum();
            err = worst(err, scaled_error(series, jacobi_generating_function(a, b, x, t)));
        }
        Ok(err)
    });
    Ok(vec![laguerre_report, jacobi_report])
}

// ------------------------------------------------------------ monogenicity

/// A random polynomial with small integer coefficients.
pub fn random_polynomial(rng: &mut ChaCha8Rng, m: usize, max_degree: u32) -> CliffordPolynomial {
    let mut p = CliffordPolynomial::zero(m);
    for _ in 0..6 {
        let mut mono = vec![0u16; m];
        for _ in 0..rng.gen_range(0..=max_degree) {
            mono[rng.gen_range(0..m)] += 1;
        }
        let blade = rng.gen_range(0..1u32 << m);
        p.add_term(mono, Multivector::blade(blade, qi(rng.gen_range(-3..=3)), m));
    }
    p
}

fn monogenicity(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let tol = o.tol(1e-6);
    let h = 1e-4;
    let mut out = Vec::new();
    let ms = o.dims(&[3, 5]);
    let ks = o.degrees(2);
    check_odd(&ms, &ks)?;
    let hgrid = o.grid(hermite_grid());
    for &m in &ms {
        for &k in &ks {
            let gens = generators(m, k)?;
            let points = lift(&hgrid.points(), m, 12);
            let params = Params::new().with("m", m).with("k", k).with("family", "hermite").with("h", h);
            out.push(numeric("monogenicity", params, hgrid.to_string(), tol, || {
                let f = hermite_gf_closed(m, k, &gens[0])?;
                let mut err = 0.0f64;
                for pk in &gens {
                    err = worst(err, monogenicity_residual(&f.with_pk(pk)?, &points, h)?);
                }
                Ok(err)
            }));
        }
    }
    let gms = o.dims(&[3]);
    let gks = o.degrees(1);
    let ggrid = o.grid(gegenbauer_grid());
    for &m in &gms {
        for &k in &gks {
            let gens = generators(m, k)?;
            let points = lift(&ggrid.points(), m, 13);
            for alpha in o.alphas(&GEGENBAUER_ALPHAS) {
                let a = exact_alpha(alpha)?;
                let params =
                    Params::new().with("m", m).with("k", k).with("family", "gegenbauer").with("alpha", alpha).with("h", h);
                let f = gegenbauer_gf_closed(m, k, &a, &gens[0])?;
                out.push(numeric("monogenicity", params, ggrid.to_string(), tol, || {
                    let mut err = 0.0f64;
                    for pk in &gens {
                        err = worst(err, monogenicity_residual(&f.with_pk(pk)?, &points, h)?);
                    }
                    Ok(err)
                }));
            }
        }
    }
    out.push(timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut bad = 0;
        for m in 2..=5 {
            for _ in 0..5 {
                let g = random_polynomial(&mut rng, m, 4);
                let ck = ck_generic(&g);
                bad += usize::from(!ck.is_monogenic() || ck.restriction() != &g);
            }
        }
        VerificationReport::exact("ck-generic", Params::new().with("m", "2..=5").with("samples", 20), "", bad)
    }));
    Ok(out)
}

// ------------------------------------------------------------------- qpoly

fn complex_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|_| {
            let x = rng.gen_range(0.1..1.2) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            Complex64::new(x, rng.gen_range(-1.2..1.2))
        })
        .collect()
}

fn qpoly(o: &Overrides) -> Result<Vec<VerificationReport>> {
    let tol = o.tol(1e-10);
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let zs = complex_points(&mut rng, 10);
    let mut out = Vec::new();
    for beta in [2.0, 2.5, -0.7] {
        let qb = exact_alpha(beta)?;
        let h = gegenbauer_input(beta, 0);
        out.push(numeric("dz-power", Params::new().with("beta", beta).with("n_max", 5), "10 random z", tol, || {
            let mut err = 0.0f64;
            let mut d = h.clone();
            for n in 0..=5 {
                let q = q_poly(n, &qb);
                for &z in &zs {
                    // holomorphic in z = x0 + i r, so d/dz = d/dx0
                    let lhs = d.eval(z.re, z.im)?;
                    let w = Complex64::new(1.0, 0.0) + z * z;
                    let rhs = crate::radial::complex_pow(w, beta - n as f64)? * q.eval(z);
                    err = worst(err, (lhs - rhs).norm() / rhs.norm().max(1.0));
                }
                d = d.diff(Var::X0);
            }
            Ok(err)
        }));
        // Q_n vanishes once n exceeds the degree of an integer power, and
        // C_n^(lambda) is undefined at lambda = 0, -1, -2, ...
        let (mut skipped, mut vanishing, mut usable) = (Vec::new(), Vec::new(), Vec::new());
        for n in 1..=5usize {
            let lambda = beta - n as f64 + 0.5;
            if lambda <= 0.0 && lambda.fract() == 0.0 {
                skipped.push(n);
            } else if q_poly(n, &qb).poly.degree().is_none() {
                vanishing.push(n);
            } else {
                usable.push((n, lambda));
            }
        }
        let params =
            Params::new().with("beta", beta).with("n_max", 5).with("skipped_n", skipped).with("vanishing_n", vanishing);
        out.push(numeric("q-gegenbauer-ratio", params, "10 random z", tol, || {
            let mut spread = 0.0f64;
            for &(n, lambda) in &usable {
                let q = q_poly(n, &qb);
                let i_n = Complex64::new(0.0, 1.0).powi(n as i32);
                let ratios: Vec<Complex64> = zs
                    .iter()
                    .map(|&z| {
                        let iz = Complex64::new(0.0, 1.0) * z;
                        q.eval(z) / (i_n * gegenbauer(n, &Complex64::new(lambda, 0.0), &iz))
                    })
                    .collect();
                for r in &ratios {
                    spread = worst(spread, (r - ratios[0]).norm() / ratios[0].norm());
                }
            }
            Ok(spread)
        }));
    }
    for text in ["z^5", "(1 + z^2)^3"] {
        let h = parse(text)?;
        out.push(numeric("dy-split", Params::new().with("h", text).with("n_max", 3), "10 random z", tol, || {
            let mut err = 0.0f64;
            let i = Complex64::new(0.0, 1.0);
            for n in 0..=3 {
                let dy = h.diff_n(Var::R, n);
                let dz = h.diff_n(Var::X0, n);
                for &z in &zs {
                    let (x0, y) = (z.re, z.im);
                    let (dyv, hz) = (dy.eval(x0, y)?, dz.eval(x0, y)?);
                    let sign = minus_one_pow(n as i64) as f64;
                    let u = i.powi(n as i32) / 2.0 * (hz + hz.conj() * sign);
                    let v = -i.powi(n as i32 + 1) / 2.0 * (hz - hz.conj() * sign);
                    err = worst(err, scaled_error(dyv.re, u.re));
                    err = worst(err, scaled_error(dyv.im, v.re));
                    err = worst(err, u.im.abs().max(v.im.abs()));
                }
            }
            Ok(err)
        }));
    }
    Ok(out)
}

/// Criterion-level summary: all reports passed and none errored.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Largest error among `reports` with the given id.
pub fn max_error(reports: &[VerificationReport], id: &str) -> f64 {
    reports.iter().filter(|r| r.identity_id == id).fold(0.0, |acc, r| worst(acc, r.max_abs_error))
}
