use monogenic::ckseries::ck_generic;
use monogenic::classical::{jacobi, jacobi_sum, laguerre};
use monogenic::clifford::{blade_product, BladeMask, Multivector};
use monogenic::fueter::ft_transform;
use monogenic::grid::Grid;
use monogenic::mvpoly::{monogenic_generators, CliffordPolynomial};
use monogenic::radial::{d_r_closed, d_r_compose, parse, Expression};
use monogenic::report::{Params, VerificationReport};
use monogenic::scalar::{qi, Q};
use monogenic::suites::{random_expression, random_polynomial};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn multivector(m: usize) -> impl Strategy<Value = Multivector<Q>> {
    prop::collection::vec((0..1u32 << m, -4i64..=4), 0..6)
        .prop_map(move |terms| Multivector::from_terms(m, terms.into_iter().map(|(b, c)| (b, qi(c)))))
}

fn triple() -> impl Strategy<Value = (Multivector<Q>, Multivector<Q>, Multivector<Q>)> {
    (1usize..=5).prop_flat_map(|m| (multivector(m), multivector(m), multivector(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn geometric_product_is_associative((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn geometric_product_distributes((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn vectors_square_to_minus_norm(xs in prop::collection::vec(-9i64..=9, 1..=6)) {
        let x = Multivector::vector(&xs.iter().map(|&v| qi(v)).collect::<Vec<_>>());
        let norm: i64 = xs.iter().map(|v| v * v).sum();
        prop_assert_eq!(x.mul(&x), Multivector::scalar(qi(-norm), xs.len()));
    }

    #[test]
    fn blade_sign_matches_product(m in 1usize..=6, a in 0u32..64, b in 0u32..64) {
        let (a, b) = (a & ((1 << m) - 1), b & ((1 << m) - 1));
        let (sign, c) = blade_product(BladeMask::new(a, m).unwrap(), BladeMask::new(b, m).unwrap()).unwrap();
        let p = Multivector::blade(a, qi(1), m).mul(&Multivector::blade(b, qi(1), m));
        prop_assert_eq!(p, Multivector::blade(c.bits(), qi(sign as i64), m));
    }

    #[test]
    fn ck_extension_is_monogenic_and_restricts(seed in any::<u64>(), m in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_polynomial(&mut rng, m, 3);
        let ck = ck_generic(&g);
        prop_assert!(ck.is_monogenic());
        prop_assert_eq!(ck.restriction(), &g);
    }

    #[test]
    fn printed_expressions_parse_back(seed in any::<u64>(), x0 in -1.0f64..1.0, r in 0.5f64..2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expression(&mut rng, 3);
        let back = parse(&e.to_string()).unwrap();
        let (a, b) = (e.eval(x0, r).unwrap(), back.eval(x0, r).unwrap());
        prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0), "{} vs {}", a, b);
    }

    #[test]
    fn closed_radial_form_matches_composition(seed in any::<u64>(), n in 0usize..=4, x0 in -1.0f64..1.0, r in 0.5f64..2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expression(&mut rng, 2);
        let a = d_r_closed(n, &e).eval(x0, r).unwrap();
        let b = d_r_compose(n, &e).eval(x0, r).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * b.norm().max(1.0));
    }

    #[test]
    fn fueter_transform_is_linear(c1 in -2.0f64..2.0, c2 in -2.0f64..2.0, n in 0usize..6, x0 in -1.0f64..1.0, r in 0.3f64..2.0) {
        let pk = CliffordPolynomial::one(3);
        let (h1, h2) = (parse("exp(z^2)").unwrap(), Expression::z().powf(n as f64));
        let both = h1.scale(Complex64::new(c1, 0.0)) + h2.scale(Complex64::new(c2, 0.0));
        let f = ft_transform(&both, &pk, 3, 0).unwrap().eval_parts(x0, r).unwrap();
        let f1 = ft_transform(&h1, &pk, 3, 0).unwrap().eval_parts(x0, r).unwrap();
        let f2 = ft_transform(&h2, &pk, 3, 0).unwrap().eval_parts(x0, r).unwrap();
        let expect = (c1 * f1.0 + c2 * f2.0, c1 * f1.1 + c2 * f2.1);
        prop_assert!((f.0 - expect.0).abs() <= 1e-9 * expect.0.abs().max(1.0));
        prop_assert!((f.1 - expect.1).abs() <= 1e-9 * expect.1.abs().max(1.0));
    }

    #[test]
    fn jacobi_recurrence_matches_sum(n in 0usize..12, a in -0.9f64..4.0, b in -0.9f64..4.0, x in -1.0f64..1.0) {
        let (p, q) = (jacobi(n, &a, &b, &x), jacobi_sum(n, &a, &b, &x));
        prop_assert!((p - q).abs() <= 1e-9 * q.abs().max(1.0));
    }

    #[test]
    fn laguerre_three_term(n in 1usize..20, a in -0.9f64..4.0, x in 0.0f64..6.0) {
        // (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}
        let nf = n as f64;
        let lhs = (nf + 1.0) * laguerre(n + 1, &a, &x);
        let rhs = (2.0 * nf + 1.0 + a - x) * laguerre(n, &a, &x) - (nf + a) * laguerre(n - 1, &a, &x);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0));
    }

    #[test]
    fn grid_display_round_trips(s in -5.0f64..5.0, e in -5.0f64..5.0, c in 0usize..20, rs in 0.1f64..3.0, rc in 0usize..20) {
        let g = Grid::new((s, e, c), (rs, rs + 1.0, rc));
        prop_assert_eq!(g.to_string().parse::<Grid>().unwrap(), g);
    }

    #[test]
    fn report_passes_below_threshold(err in 0.0f64..2.0, thr in 0.0f64..2.0) {
        let r = VerificationReport::numeric("p", Params::new(), "", err, thr);
        prop_assert_eq!(r.passed, err < thr);
    }
}

#[test]
fn generators_are_monogenic() {
    for (m, k) in [(3, 3), (4, 2), (5, 2)] {
        for p in monogenic_generators(m, k).unwrap().elements() {
            assert!(p.dirac().is_zero());
        }
    }
}
