//! Command-line front end: `verify`, `eval`, `corollaries` and `bench`.
//!
//! [`run`] returns the process exit code: 0 when everything passed, 1 on a
//! numeric failure, 2 on a usage or precondition error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ckseries::{ck_gegenbauer_series, ck_hermite_series, CkSeries};
use crate::classical::double_factorial;
use crate::clifford::blade_label;
use crate::corollary::{JacobiSums, LaguerreSums};
use crate::error::Error;
use crate::fueter::{ft_transform, gegenbauer_gf_closed, hermite_gf_closed, FtResult};
use crate::grid::{diagonal, Grid};
use crate::mvpoly::{monogenic_generators, CliffordPolynomial};
use crate::radial::parse;
use crate::report::{scaled_error, worst};
use crate::scalar::q_from_f64;
use crate::suites::{self, corollary4_grid, Overrides, Suite};

#[derive(Debug, Parser)]
#[command(name = "monogenic", version, about = "Fueter-transform generating functions: verify, evaluate, benchmark")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an identity suite and write one JSON line per instance.
    Verify {
        /// operators, coeffs, leibniz, lemma1, thm1, thm2, thm3, corollary3,
        /// corollary4, classical-gf, monogenicity or qpoly
        suite: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Evaluate a closed form, a series or a transform on a grid.
    Eval {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        opts: Opts,
    },
    /// Tabulate both sides of the Laguerre (3) or Jacobi (4) sum identities.
    Corollaries {
        #[arg(value_parser = ["3", "4"])]
        section: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Time closed form against series evaluation.
    Bench {
        #[arg(value_enum)]
        target: BenchTarget,
        /// Repetitions per evaluation
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct Opts {
    /// Dimension of the vector part (odd for transforms)
    #[arg(long)]
    pub m: Option<usize>,
    /// Degree of the inner spherical monogenic
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Holomorphic input h(z) in the expression language
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// x0=start:stop:count,r=start:stop:count
    #[arg(long)]
    pub grid: Option<String>,
    /// Single point x0,r
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    #[arg(long)]
    pub trunc: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    HermiteClosed,
    HermiteSeries,
    GegenbauerClosed,
    GegenbauerSeries,
    Ft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchTarget {
    Hermite,
    Gegenbauer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// An error that ends the command with a given exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn numeric(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("io: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Verify { suite, opts } => verify(&suite, &opts, stdout),
        Command::Eval { target, opts } => eval(target, &opts, stdout),
        Command::Corollaries { section, opts } => corollaries(&section, &opts, stdout),
        Command::Bench { target, reps, opts } => bench(target, reps, &opts, stdout),
    }
}

fn with_output(opts: &Opts, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    match &opts.out {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            f(&mut file)?;
            file.flush()?;
        }
        None => f(stdout)?,
    }
    Ok(())
}

fn grid_from(opts: &Opts) -> Result<Option<Grid>, Failure> {
    if let Some(at) = &opts.at {
        return Ok(Some(Grid::parse_at(at)?));
    }
    opts.grid.as_deref().map(|g| g.parse::<Grid>()).transpose().map_err(Failure::from)
}

fn verify(suite: &str, opts: &Opts, stdout: &mut dyn Write) -> Outcome {
    let suite: Suite = suite.parse().map_err(|_| {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.id()).collect();
        Failure::usage(format!("unknown suite `{suite}` (known: {})", known.join(", ")))
    })?;
    let overrides = Overrides {
        m: opts.m,
        k: opts.k,
        alpha: opts.alpha,
        trunc: opts.trunc,
        tol: opts.tol,
        grid: grid_from(opts)?,
    };
    let reports = suites::run(suite, &overrides)?;
    with_output(opts, stdout, |w| {
        for r in &reports {
            writeln!(w, "{}", r.to_json_line())?;
        }
        Ok(())
    })?;
    Ok(if suites::all_passed(&reports) { 0 } else { 1 })
}

/// A rectangular table written as CSV (`{:.16e}`) or JSON.
struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
    meta: Value,
}

impl Table {
    fn write(&self, format: Format, w: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(w, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
                    writeln!(w, "{}", cells.join(","))?;
                }
                Ok(())
            }
            Format::Json => {
                let mut v = self.meta.clone();
                v["columns"] = json!(self.columns);
                v["rows"] = json!(self.rows);
                writeln!(w, "{v}")
            }
        }
    }
}

fn first_generator(m: usize, k: usize) -> Result<CliffordPolynomial, Failure> {
    Ok(monogenic_generators(m, k)?.elements()[0].clone())
}

fn alpha_of(opts: &Opts) -> Result<f64, Failure> {
    opts.alpha.ok_or_else(|| Failure::usage("this target needs --alpha"))
}

enum Evaluator {
    Closed(FtResult),
    Series(CkSeries),
}

impl Evaluator {
    fn parts(&self, x0: f64, r: f64) -> crate::Result<(f64, f64)> {
        match self {
            Evaluator::Closed(f) => f.eval_parts(x0, r),
            Evaluator::Series(s) => s.eval_parts(x0, r),
        }
    }

    fn value(&self, x0: f64, x: &[f64]) -> crate::Result<crate::clifford::Multivector<f64>> {
        match self {
            Evaluator::Closed(f) => f.eval(x0, x),
            Evaluator::Series(s) => s.eval(x0, x),
        }
    }
}

fn eval(target: Target, opts: &Opts, stdout: &mut dyn Write) -> Outcome {
    let m = opts.m.unwrap_or(3);
    let k = opts.k.unwrap_or(0);
    let pk = first_generator(m, k)?;
    let gegenbauer = matches!(target, Target::GegenbauerClosed | Target::GegenbauerSeries);
    let default_grid = if gegenbauer { Grid::new((-0.3, 0.3, 7), (0.2, 0.8, 7)) } else { Grid::new((-1.0, 1.0, 11), (0.2, 2.0, 10)) };
    let grid = grid_from(opts)?.unwrap_or(default_grid);
    if !grid.is_empty() && grid.min_r() <= 0.0 {
        return Err(Failure::usage("grid must have r > 0"));
    }
    if gegenbauer && !grid.is_empty() && grid.max_r() >= 1.0 {
        return Err(Failure::usage("Gegenbauer targets need r < 1"));
    }
    let mut meta = json!({ "target": format!("{target:?}"), "m": m, "k": k, "pk": pk.to_string(), "grid": grid.to_string() });
    let evaluator = match target {
        Target::HermiteClosed => Evaluator::Closed(hermite_gf_closed(m, k, &pk)?),
        Target::HermiteSeries => {
            let trunc = opts.trunc.unwrap_or(30);
            meta["trunc"] = json!(trunc);
            Evaluator::Series(ck_hermite_series(&pk, trunc)?)
        }
        Target::GegenbauerClosed => {
            let alpha = alpha_of(opts)?;
            meta["alpha"] = json!(alpha);
            let a = q_from_f64(alpha).ok_or_else(|| Failure::usage("alpha must be finite"))?;
            Evaluator::Closed(gegenbauer_gf_closed(m, k, &a, &pk)?)
        }
        Target::GegenbauerSeries => {
            let alpha = alpha_of(opts)?;
            let trunc = opts.trunc.unwrap_or(25);
            meta["alpha"] = json!(alpha);
            meta["trunc"] = json!(trunc);
            Evaluator::Series(ck_gegenbauer_series(&pk, alpha, trunc)?)
        }
        Target::Ft => {
            let text = opts.h.as_deref().ok_or_else(|| Failure::usage("`eval ft` needs --h"))?;
            let h = parse(text)?;
            let f = ft_transform(&h, &pk, m, k)?;
            let df = double_factorial((2 * k + m - 1) as i64);
            meta["h"] = json!(text);
            meta["scale"] = json!(format!("includes the factor (2k+m-1)!! = {df}"));
            Evaluator::Closed(f)
        }
    };
    let mut columns: Vec<String> = ["x0", "r", "A", "B"].map(String::from).to_vec();
    columns.extend((0..1u32 << m).map(|b| format!("mv_{}", blade_label(b))));
    let u = diagonal(m);
    let mut rows = Vec::with_capacity(grid.len());
    for (x0, r) in grid.points() {
        let num = |e: Error| Failure::numeric(format!("at x0 = {x0}, r = {r}: {e}"));
        let (a, b) = evaluator.parts(x0, r).map_err(num)?;
        let x: Vec<f64> = u.iter().map(|c| c * r).collect();
        let v = evaluator.value(x0, &x).map_err(num)?;
        let mut row = vec![x0, r, a, b];
        row.extend((0..1u32 << m).map(|bits| v.coefficient(bits)));
        rows.push(row);
    }
    meta["direction"] = json!(u);
    with_output(opts, stdout, |w| Table { columns, rows, meta }.write(opts.format, w))?;
    Ok(0)
}

fn corollaries(section: &str, opts: &Opts, stdout: &mut dyn Write) -> Outcome {
    let m = opts.m.unwrap_or(3);
    let k = opts.k.unwrap_or(0);
    let jacobi = section == "4";
    let grid = grid_from(opts)?.unwrap_or_else(|| if jacobi { corollary4_grid() } else { Grid::new((-1.0, 1.0, 11), (0.2, 2.0, 10)) });
    let trunc = opts.trunc.unwrap_or(if jacobi { 25 } else { 30 });
    let tol = opts.tol.unwrap_or(if jacobi { 1e-8 } else { 1e-9 });
    let mut meta = json!({ "section": section, "m": m, "k": k, "trunc": trunc, "tol": tol, "grid": grid.to_string() });
    let eval: Box<dyn Fn(f64, f64) -> crate::Result<[crate::corollary::Sides; 2]>> = if jacobi {
        let alpha = opts.alpha.unwrap_or(1.5);
        let sums = JacobiSums::new(m, k, alpha)?;
        meta["alpha"] = json!(alpha);
        meta["constant"] = json!(sums.constant());
        Box::new(move |x0, r| sums.eval(x0, r, trunc))
    } else {
        let sums = LaguerreSums::new(m, k)?;
        Box::new(move |x0, r| sums.eval(x0, r, trunc))
    };
    let columns = ["x0", "r", "lhs_i", "rhs_i", "error_i", "lhs_ii", "rhs_ii", "error_ii"].map(String::from).to_vec();
    let mut rows = Vec::new();
    let mut max = 0.0f64;
    for (x0, r) in grid.points() {
        let [i, ii] = eval(x0, r).map_err(|e| Failure::numeric(format!("at x0 = {x0}, r = {r}: {e}")))?;
        let (ei, eii) = (scaled_error(i.lhs, i.rhs), scaled_error(ii.lhs, ii.rhs));
        max = worst(max, worst(ei, eii));
        rows.push(vec![x0, r, i.lhs, i.rhs, ei, ii.lhs, ii.rhs, eii]);
    }
    meta["max_error"] = json!(max);
    meta["passed"] = json!(max < tol);
    with_output(opts, stdout, |w| Table { columns, rows, meta }.write(opts.format, w))?;
    Ok(if max < tol { 0 } else { 1 })
}

fn bench(target: BenchTarget, reps: usize, opts: &Opts, stdout: &mut dyn Write) -> Outcome {
    let m = opts.m.unwrap_or(3);
    let k = opts.k.unwrap_or(0);
    let pk = first_generator(m, k)?;
    let reps = reps.max(1);
    let (closed, series, default_grid) = match target {
        BenchTarget::Hermite => {
            let trunc = opts.trunc.unwrap_or(30);
            (hermite_gf_closed(m, k, &pk)?, ck_hermite_series(&pk, trunc)?, Grid::new((-1.0, 1.0, 100), (0.2, 2.0, 100)))
        }
        BenchTarget::Gegenbauer => {
            let alpha = opts.alpha.unwrap_or(1.5);
            let a = q_from_f64(alpha).ok_or_else(|| Failure::usage("alpha must be finite"))?;
            let trunc = opts.trunc.unwrap_or(25);
            (
                gegenbauer_gf_closed(m, k, &a, &pk)?,
                ck_gegenbauer_series(&pk, alpha, trunc)?,
                Grid::new((-0.3, 0.3, 100), (0.2, 0.8, 100)),
            )
        }
    };
    let grid = grid_from(opts)?.unwrap_or(default_grid);
    let points = grid.points();
    let columns = ["points", "reps", "trunc", "closed_ms", "series_ms", "max_error"].map(String::from).to_vec();
    let meta = json!({ "target": format!("{target:?}"), "m": m, "k": k, "grid": grid.to_string() });
    let mut rows = Vec::new();
    if !points.is_empty() {
        let time = |f: &dyn Fn(f64, f64) -> crate::Result<(f64, f64)>| {
            let t = Instant::now();
            let mut out = Vec::with_capacity(points.len());
            for _ in 0..reps {
                out = points.iter().map(|&(x0, r)| f(x0, r).unwrap_or((f64::NAN, f64::NAN))).collect();
            }
            (t.elapsed().as_secs_f64() * 1e3 / reps as f64, out)
        };
        let (closed_ms, a) = time(&|x0, r| closed.eval_parts(x0, r));
        let (series_ms, b) = time(&|x0, r| series.eval_parts(x0, r));
        let err = a.iter().zip(&b).fold(0.0f64, |acc, (p, q)| worst(acc, worst(scaled_error(q.0, p.0), scaled_error(q.1, p.1))));
        rows.push(vec![points.len() as f64, reps as f64, series.truncation() as f64, closed_ms, series_ms, err]);
    }
    with_output(opts, stdout, |w| Table { columns, rows, meta }.write(opts.format, w))?;
    Ok(0)
}
