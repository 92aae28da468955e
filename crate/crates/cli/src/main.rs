use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lommel::verify::{self, GridSpec, Suite, SweepReport};
use lommel::{BoundArgs, CheckResult, Error, ParamPoint, SeriesOptions, Target, DEFAULT_TOL};

mod output;

use output::{Format, Row};

/// Modified Lommel functions: evaluation, inequality checks and verification sweeps.
#[derive(Parser, Debug)]
#[command(name = "lommel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a function at one point or over an x grid.
    Eval(EvalArgs),
    /// Check one cataloged inequality at one point or over an x grid.
    Bound(BoundCmd),
    /// Run the sweep registered under a claim or bound id.
    Sweep(SweepArgs),
    /// Run a named suite of sweeps.
    Suite(SuiteArgs),
    /// List the inequality catalog and every registered claim id.
    Catalog(CatalogArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Func {
    TTilde,
    T,
    BesselI,
    StruveL,
    A,
    B,
    TPrime,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::TTilde => "t_tilde",
            Func::T => "t",
            Func::BesselI => "bessel_i",
            Func::StruveL => "struve_l",
            Func::A => "a",
            Func::B => "b",
            Func::TPrime => "t_prime",
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Relative truncation tolerance of the series.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write results to PATH (.json or .csv) instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Point {
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// x grid "lo:hi:n:log|lin" (replaces --x).
    #[arg(long)]
    grid: Option<GridSpec>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    func: Func,
    #[command(flatten)]
    point: Point,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct BoundCmd {
    #[arg(long)]
    id: String,
    #[command(flatten)]
    point: Point,
    #[arg(long, allow_negative_numbers = true)]
    mu1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu1: Option<f64>,
    /// Second argument of two-argument bounds (defaults to 2x on a grid).
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    id: String,
    /// Restrict the sweep to one parameter point.
    #[arg(long, allow_negative_numbers = true, requires = "nu")]
    mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "mu")]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["mu", "nu1"])]
    mu1: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "mu1")]
    nu1: Option<f64>,
    #[arg(long)]
    grid: Option<GridSpec>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value = "all")]
    name: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Usage or region problem: exit 2.
    Usage(String),
    /// A check ran and was violated: exit 1.
    Violated,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Writes one line to stdout; a closed pipe ends output silently.
fn say(line: &str) -> Result<(), Failure> {
    match writeln!(std::io::stdout().lock(), "{line}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::from(e).into()),
        _ => Ok(()),
    }
}

fn options(tol: f64) -> Result<SeriesOptions, Failure> {
    let mut o = SeriesOptions::with_tol(tol);
    if let Ok(v) = std::env::var("LOMMEL_MAX_TERMS") {
        o.max_terms = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("LOMMEL_MAX_TERMS must be a positive integer, got `{v}`")))?;
    }
    Ok(o)
}

fn need(v: Option<f64>, flag: &str) -> Result<f64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn x_values(point: &Point) -> Result<Vec<f64>, Failure> {
    match (&point.grid, point.x) {
        (Some(g), None) => Ok(g.x_points.clone()),
        (None, Some(x)) => Ok(vec![x]),
        (Some(_), Some(_)) => Err(Failure::Usage("give either --x or --grid, not both".into())),
        (None, None) => Err(Failure::Usage("missing required flag --x (or --grid)".into())),
    }
}

fn eval_one(f: Func, mu: Option<f64>, nu: Option<f64>, x: f64, o: &SeriesOptions) -> Result<lommel::Eval, Failure> {
    let p = || -> Result<ParamPoint, Failure> { Ok(ParamPoint::new(need(mu, "mu")?, need(nu, "nu")?)) };
    let v = match f {
        Func::TTilde => lommel::lommel_t_tilde(p()?, x, o)?,
        Func::T => lommel::lommel_t(p()?, x, o)?,
        Func::TPrime => lommel::lommel_t_tilde_prime(p()?, x, o)?,
        Func::BesselI => lommel::bessel_i(need(nu, "nu")?, x, o)?,
        Func::StruveL => lommel::struve_l(need(nu, "nu")?, x, o)?,
        Func::A => lommel::Eval::exact(lommel::a_coeff(p()?, x)?),
        Func::B => lommel::b_func(p()?, x, o)?,
    };
    Ok(v)
}

fn run_eval(a: EvalArgs) -> Outcome {
    let o = options(a.common.tol)?;
    let xs = x_values(&a.point)?;
    let (mu, nu) = (a.point.mu, a.point.nu);
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for &x in &xs {
        let v = eval_one(a.func, mu, nu, x, &o)?;
        let (m, n) = (mu.unwrap_or(f64::NAN), nu.unwrap_or(f64::NAN));
        rows.push(Row::new(m, n, x, a.func.name(), v.value));
        rows.push(Row::new(m, n, x, &format!("{}_err", a.func.name()), v.abs_err));
        lines.push(format!(
            "{}(mu={}, nu={}, x={x}) = {:.16e} ± {:.3e} ({} terms)",
            a.func.name(),
            fmt_opt(mu),
            fmt_opt(nu),
            v.value,
            v.abs_err,
            v.terms_used
        ));
    }
    emit_rows(&rows, &lines, a.common.out.as_ref())
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

fn describe_check(r: &CheckResult) -> Vec<String> {
    let mut out = vec![format!(
        "{} at mu={} nu={} x={}: target = {:.16e} ± {:.3e}",
        r.id, r.args.p.mu, r.args.p.nu, r.args.x, r.target_value, r.target_err
    )];
    for (name, side) in [("lower", r.lower), ("upper", r.upper)] {
        if let Some(s) = side {
            out.push(format!(
                "  {name}: bound = {:.16e}  ratio = {:.9}  margin = {:.3e}  budget = {:.3e}  {}",
                s.value,
                s.ratio(r.target_value),
                s.margin,
                s.budget,
                if s.holds() { "holds" } else { "VIOLATED" }
            ));
        }
    }
    out
}

fn run_bound(a: BoundCmd) -> Outcome {
    let o = options(a.common.tol)?;
    let b = lommel::lookup(&a.id)?;
    let p = ParamPoint::new(need(a.point.mu, "mu")?, need(a.point.nu, "nu")?);
    let p1 = match (a.mu1, a.nu1) {
        (Some(m), Some(n)) => Some(ParamPoint::new(m, n)),
        (None, None) => None,
        _ => return Err(Failure::Usage("--mu1 and --nu1 go together".into())),
    };
    let xs = x_values(&a.point)?;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut violated = false;
    for &x in &xs {
        let mut args = BoundArgs::new(p, x);
        if let Some(q) = p1 {
            args = args.with_p1(q);
        }
        if b.needs_y {
            args = args.with_y(match a.y {
                Some(y) if a.point.grid.is_none() => y,
                Some(_) => return Err(Failure::Usage("--y cannot be combined with --grid".into())),
                None if a.point.grid.is_some() => verify::inequality::Y_FACTOR * x,
                None => return Err(Failure::Usage(format!("{} needs --y", b.id))),
            });
        }
        let r = lommel::bounds::check_bound(b, &args, &o)?;
        if !r.valid {
            let reqs: Vec<&str> = b.sides().map(|(_, s)| s.requirement).collect();
            return Err(Failure::Usage(format!(
                "{} requires {} (got μ={}, ν={})",
                b.id,
                reqs.join(", or "),
                p.mu,
                p.nu
            )));
        }
        violated |= !r.holds();
        rows.push(Row::new(p.mu, p.nu, x, "target", r.target_value));
        if let Some(s) = r.lower {
            rows.push(Row::new(p.mu, p.nu, x, "lower", s.value));
            rows.push(Row::new(p.mu, p.nu, x, "lower_ratio", s.ratio(r.target_value)));
        }
        if let Some(s) = r.upper {
            rows.push(Row::new(p.mu, p.nu, x, "upper", s.value));
            rows.push(Row::new(p.mu, p.nu, x, "upper_ratio", s.ratio(r.target_value)));
        }
        lines.extend(describe_check(&r));
        if b.target == Target::TuranDelta {
            // Turán differences are usually quoted relative to t̃².
            let t = lommel::lommel_t_tilde(p, x, &o)?.value;
            let t2 = t * t;
            let mut note = format!("  relative to t̃²: target = {:.9}", r.target_value / t2);
            for (name, side) in [("lower", r.lower), ("upper", r.upper)] {
                if let Some(sd) = side {
                    note += &format!("  {name} = {:.9}", sd.value / t2);
                    rows.push(Row::new(p.mu, p.nu, x, &format!("{name}_over_t2"), sd.value / t2));
                }
            }
            rows.push(Row::new(p.mu, p.nu, x, "target_over_t2", r.target_value / t2));
            lines.push(note);
        }
    }
    emit_rows(&rows, &lines, a.common.out.as_ref())?;
    if violated {
        Err(Failure::Violated)
    } else {
        Ok(())
    }
}

fn summary(r: &SweepReport) -> String {
    format!(
        "{:<22} {}  points={:<6} min_margin={:>11.3e}  violations={}{}",
        r.claim_id,
        if r.passed { "PASS" } else { "FAIL" },
        r.points_checked,
        r.min_margin,
        r.violations.len(),
        r.sharpness_ratio_at_min_x
            .map_or_else(String::new, |s| format!("  sharpness@min_x={s:.6}"))
    )
}

fn emit_reports(reports: &[SweepReport], out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(path) => verify::write_reports(reports, path)?,
        None => {
            for r in reports {
                say(&summary(r))?;
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn run_sweep(a: SweepArgs) -> Outcome {
    let o = options(a.common.tol)?;
    let mut grid = match a.grid {
        Some(g) => g.with_seed(a.seed),
        None => verify::default_grid(&a.id, a.seed),
    };
    if let (Some(mu), Some(nu)) = (a.mu, a.nu) {
        let p = ParamPoint::new(mu, nu);
        match (a.mu1, a.nu1) {
            (Some(m1), Some(n1)) => grid = grid.with_pairs(vec![(p, ParamPoint::new(m1, n1))]),
            _ => grid = grid.with_params(vec![p]),
        }
    }
    let r = verify::sweep(&a.id, &grid, &o)?;
    emit_reports(&[r], a.common.out.as_ref())
}

fn run_suite(a: SuiteArgs) -> Outcome {
    let o = options(a.common.tol)?;
    let reports = verify::suite(a.name, a.seed, &o)?;
    emit_reports(&reports, a.common.out.as_ref())
}

fn run_catalog(a: CatalogArgs) -> Outcome {
    let bounds = lommel::catalog();
    let claims = verify::claim_ids();
    match a.out {
        Some(path) => {
            let doc = serde_json::json!({ "bounds": bounds, "claims": claims });
            let text = serde_json::to_string_pretty(&doc).map_err(Error::from)?;
            std::fs::write(&path, text + "\n").map_err(Error::from)?;
        }
        None => {
            let w = |s: String| say(&s);
            for b in bounds {
                w(format!("{:<5} {:<16} {}", b.id, format!("{:?}", b.target), b.statement))?;
                for (side, s) in b.sides() {
                    w(format!(
                        "      {:<6} requires {}{}{}",
                        format!("{side:?}").to_lowercase(),
                        s.requirement,
                        if s.sharp_at_zero { "; sharp as x→0" } else { "" },
                        if s.correct_order_at_infinity {
                            "; correct order as x→∞"
                        } else {
                            ""
                        }
                    ))?;
                }
            }
            w(format!("claims: {}", claims.join(" ")))?;
        }
    }
    Ok(())
}

fn emit_rows(rows: &[Row], lines: &[String], out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(path) => output::write_rows(rows, path, Format::from_path(path)?)?,
        None => {
            for l in lines {
                say(l)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => run_eval(a),
        Command::Bound(a) => run_bound(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Suite(a) => run_suite(a),
        Command::Catalog(a) => run_catalog(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
