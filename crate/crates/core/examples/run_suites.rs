//! Run identity suites from code and summarise the reports.
//!
//! `cargo run --release --example run_suites -- thm1 corollary3`

use monogenic::suites::{self, Overrides, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let picked: Vec<Suite> = if names.is_empty() {
        vec![Suite::Coeffs, Suite::Thm1, Suite::Qpoly]
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    for suite in picked {
        let reports = suites::run(suite, &Overrides::default())?;
        let failed = reports.iter().filter(|r| !r.passed).count();
        println!("{suite:<14} {:>3} instances, {failed} failed", reports.len());
        for r in reports.iter().filter(|r| !r.exact) {
            println!("    {:<20} {:.2e} < {:.0e}", r.identity_id, r.max_abs_error, r.threshold);
        }
    }
    Ok(())
}
