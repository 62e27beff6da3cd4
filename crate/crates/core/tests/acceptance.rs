//! Acceptance run: one PASS/FAIL line per criterion, at the stated tolerances.
//!
//! Criterion 5 asks the Gegenbauer CK series to match on `|x0| <= 0.3` for
//! `r` up to 0.8, but the series in `x0` only converges for `|x0| < 1 - r`.
//! It is listed in `KNOWN_FAILURES`; the extra lines under it show the
//! closed form and the series agreeing wherever the series converges.

use std::process::ExitCode;
use std::time::Instant;

use monogenic::grid::Grid;
use monogenic::report::{worst, VerificationReport};
use monogenic::suites::{run, Overrides, Suite};

const KNOWN_FAILURES: [&str; 1] = ["5"];

struct Outcome {
    id: &'static str,
    passed: bool,
}

fn summarize(reports: &[VerificationReport], ids: Option<&[&str]>) -> (bool, usize, usize, f64, bool) {
    let picked: Vec<&VerificationReport> =
        reports.iter().filter(|r| ids.is_none_or(|ids| ids.contains(&r.identity_id.as_str()))).collect();
    let failed = picked.iter().filter(|r| !r.passed).count();
    let numeric: Vec<_> = picked.iter().filter(|r| !r.exact).collect();
    let err = numeric.iter().fold(0.0, |acc, r| worst(acc, r.max_abs_error));
    (failed == 0 && !picked.is_empty(), picked.len(), failed, err, numeric.is_empty())
}

fn line(label: &str, text: &str, reports: &[VerificationReport], ids: Option<&[&str]>) -> bool {
    let (passed, n, failed, err, exact) = summarize(reports, ids);
    let detail = if exact {
        format!("{n} exact checks, {failed} mismatching")
    } else {
        format!("{n} instances, {failed} failed, max error {err:.2e}")
    };
    println!("{} {label}: {text} ({detail})", if passed { "PASS" } else { "FAIL" });
    for r in reports.iter().filter(|r| !r.passed && ids.is_none_or(|ids| ids.contains(&r.identity_id.as_str()))).take(4) {
        println!("       {} {} error {:.2e} threshold {:.0e} {}", r.identity_id, serde_json::to_string(&r.params).unwrap_or_default(), r.max_abs_error, r.threshold, r.error.as_deref().unwrap_or(""));
    }
    passed
}

fn suite(s: Suite) -> Vec<VerificationReport> {
    suite_with(s, &Overrides::default())
}

fn suite_with(s: Suite, o: &Overrides) -> Vec<VerificationReport> {
    run(s, o).unwrap_or_else(|e| panic!("suite {s} could not start: {e}"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut outcomes = Vec::new();
    let mut record = |id: &'static str, passed: bool| outcomes.push(Outcome { id, passed });

    let ops = suite(Suite::Operators);
    record("1", line("criterion 1", "operator chains equal explicit forms, m in {3,5,7}, k <= 3", &ops, None));

    let coeffs = suite(Suite::Coeffs);
    record("2", line("criterion 2", "coefficient recursion, Bessel link, closed vs composed radial operators", &coeffs, None));

    let lemma = suite(Suite::Lemma1);
    record("3", line("criterion 3", "transforms of z^n, i z^n, z^-n, i z^-n at x0 = 0", &lemma, Some(&["lemma1"])));

    let thm1 = suite(Suite::Thm1);
    record("4", line("criterion 4", "Hermite: transform, closed form, CK series, m = 3 reference", &thm1, None));

    let thm2 = suite(Suite::Thm2);
    let thm3 = suite(Suite::Thm3);
    let both: Vec<VerificationReport> = thm2.iter().chain(&thm3).cloned().collect();
    record("5", line("criterion 5", "Gegenbauer: transform and closed form vs CK series(25) on |x0| <= 0.3, r in [0.2,0.8]", &both, None));
    line("   5a", "transform = constant * CK series", &thm2, Some(&["thm2-series"]));
    line("   5b", "transform = constant * closed form", &thm2, Some(&["thm2-closed"]));
    line("   5c", "closed form = CK series", &thm3, Some(&["thm3-series"]));
    line("   5d", "m = 3 reference = closed form", &thm3, Some(&["thm3-reference"]));
    let inside = Overrides { grid: Some(Grid::new((-0.3, 0.3, 7), (0.2, 0.4, 5))), ..Default::default() };
    line("   5e", "closed form = CK series(25) on r in [0.2,0.4]", &suite_with(Suite::Thm3, &inside), Some(&["thm3-series"]));
    let narrow = Overrides { grid: Some(Grid::new((-0.15, 0.15, 7), (0.2, 0.8, 7))), trunc: Some(100), ..Default::default() };
    line("   5f", "closed form = CK series(100) on |x0| <= 0.15, r in [0.2,0.8]", &suite_with(Suite::Thm3, &narrow), Some(&["thm3-series"]));

    let c3 = suite(Suite::Corollary3);
    let c4 = suite(Suite::Corollary4);
    let cor: Vec<VerificationReport> = c3.into_iter().chain(c4).collect();
    record("6", line("criterion 6", "Laguerre sums (30 terms, 1e-9) and Jacobi sums (25 terms, 1e-8)", &cor, None));

    let mono = suite(Suite::Monogenicity);
    record("7", line("criterion 7", "finite-difference monogenicity, exact CK annihilation", &mono, None));

    let gf = suite(Suite::ClassicalGf);
    record("8", line("criterion 8", "Laguerre and Jacobi generating functions at 20 random tuples", &gf, None));

    let qp = suite(Suite::Qpoly);
    record("9", line("criterion 9", "derivatives of (1+z^2)^beta and the Gegenbauer ratio", &qp, Some(&["dz-power", "q-gegenbauer-ratio"])));
    line("   9b", "imaginary-direction derivative split", &qp, Some(&["dy-split"]));

    line("extra", "product rules for D_r and D^r", &suite(Suite::Leibniz), None);
    line("extra", "transform is linear", &lemma, Some(&["ft-linearity"]));

    let secs = start.elapsed().as_secs_f64();
    let fast = secs < 120.0;
    println!("{} runtime: {secs:.1} s for all suites (target 120 s)", if fast { "PASS" } else { "FAIL" });

    let mut unexpected = !fast;
    for o in &outcomes {
        let known = KNOWN_FAILURES.contains(&o.id);
        match (o.passed, known) {
            (false, true) => println!("note: criterion {} fails as expected; see the module docs of this test", o.id),
            (true, true) => println!("note: criterion {} passed although listed as a known failure", o.id),
            (false, false) => unexpected = true,
            (true, false) => {}
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
