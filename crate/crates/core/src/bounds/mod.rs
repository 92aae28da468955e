//! Catalog of inequalities for t̃_{μ,ν} and a pointwise checker.
//!
//! Every [`Bound`] compares a *target* quantity (t̃ itself, a ratio, a
//! logarithmic derivative or a Turán difference) against a lower and/or an
//! upper expression, each with its own validity region. [`check`] evaluates
//! both in error-propagating arithmetic and reports a signed margin together
//! with the error budget below which a negative margin is not a violation.

pub(crate) mod formulas;
pub mod regions;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::est::Est;
use crate::params::ParamPoint;
use crate::series::SeriesOptions;

pub use regions::{sinh_quadratic, sinh_quadratic_step, sinh_validity, SinhValidity};

/// Multiple of the propagated evaluation error tolerated on a margin.
pub const BUDGET_FACTOR: f64 = 10.0;

/// The quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// t̃_{μ,ν}(x).
    TTilde,
    /// t̃_{μ,ν}(x) / t̃_{μ−1,ν−1}(x).
    RatioSucc,
    /// t̃_{μ,ν}(x) / t̃_{μ,ν}(y).
    RatioTwoX,
    /// x t̃′_{μ,ν}(x) / t̃_{μ,ν}(x).
    LogDeriv,
    /// t̃_{μ,ν}² − t̃_{μ−1,ν−1} t̃_{μ+1,ν+1}.
    TuranDelta,
    /// t̃_{μ,ν}² − t̃_{μ−1,ν} t̃_{μ+1,ν}.
    TuranLambdaMu,
    /// t̃_{μ,ν}² − t̃_{μ,ν−1} t̃_{μ,ν+1}.
    TuranLambdaNu,
    /// 2 b_{μ+1,ν+1}(x).
    BFunc,
}

impl Target {
    pub fn describe(&self) -> &'static str {
        match self {
            Target::TTilde => "t̃_{μ,ν}(x)",
            Target::RatioSucc => "t̃_{μ,ν}(x)/t̃_{μ−1,ν−1}(x)",
            Target::RatioTwoX => "t̃_{μ,ν}(x)/t̃_{μ,ν}(y)",
            Target::LogDeriv => "x t̃′_{μ,ν}(x)/t̃_{μ,ν}(x)",
            Target::TuranDelta => "t̃_{μ,ν}² − t̃_{μ−1,ν−1} t̃_{μ+1,ν+1}",
            Target::TuranLambdaMu => "t̃_{μ,ν}² − t̃_{μ−1,ν} t̃_{μ+1,ν}",
            Target::TuranLambdaNu => "t̃_{μ,ν}² − t̃_{μ,ν−1} t̃_{μ,ν+1}",
            Target::BFunc => "2 b_{μ+1,ν+1}(x)",
        }
    }

    fn evaluate(&self, a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
        use formulas::*;
        match self {
            Target::TTilde => target_t(a, o),
            Target::RatioSucc => target_ratio_succ(a, o),
            Target::RatioTwoX => target_ratio_two_x(a, o),
            Target::LogDeriv => target_log_deriv(a, o),
            Target::TuranDelta => target_turan_delta(a, o),
            Target::TuranLambdaMu => target_turan_lambda_mu(a, o),
            Target::TuranLambdaNu => target_turan_lambda_nu(a, o),
            Target::BFunc => target_b_shifted(a, o),
        }
    }

    /// Growth of the target as x → ∞, used to normalize large-x comparisons:
    /// e^x/√x for function values and e^(2x)/x² for Turán differences.
    pub fn large_x_scale(&self, x: f64) -> f64 {
        match self {
            Target::TTilde => x.sqrt() * (-x).exp(),
            Target::TuranDelta | Target::TuranLambdaMu | Target::TuranLambdaNu => x * x * (-2.0 * x).exp(),
            _ => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
    TwoSided,
}

/// Inputs of a pointwise check. `p1` is used by the order comparison and
/// `y` by the two-point ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundArgs {
    pub p: ParamPoint,
    pub p1: Option<ParamPoint>,
    pub x: f64,
    pub y: Option<f64>,
}

impl BoundArgs {
    pub fn new(p: ParamPoint, x: f64) -> Self {
        Self {
            p,
            p1: None,
            x,
            y: None,
        }
    }

    pub fn with_p1(mut self, p1: ParamPoint) -> Self {
        self.p1 = Some(p1);
        self
    }

    pub fn with_y(mut self, y: f64) -> Self {
        self.y = Some(y);
        self
    }
}

type Predicate = fn(&BoundArgs) -> bool;
type Evaluator = fn(&BoundArgs, &SeriesOptions) -> Result<Est>;

/// One side (lower or upper) of a cataloged inequality.
#[derive(Clone, Copy, Serialize)]
pub struct BoundSide {
    pub requirement: &'static str,
    /// `bound/target → 1` as x ↓ 0.
    pub sharp_at_zero: bool,
    /// The bound grows like the target as x → ∞.
    pub correct_order_at_infinity: bool,
    #[serde(skip)]
    valid: Predicate,
    #[serde(skip)]
    eval: Evaluator,
}

impl BoundSide {
    pub fn valid(&self, a: &BoundArgs) -> bool {
        (self.valid)(a)
    }

    pub fn evaluate(&self, a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
        (self.eval)(a, o)
    }
}

impl std::fmt::Debug for BoundSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundSide")
            .field("requirement", &self.requirement)
            .field("sharp_at_zero", &self.sharp_at_zero)
            .field("correct_order_at_infinity", &self.correct_order_at_infinity)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bound {
    pub id: &'static str,
    pub target: Target,
    pub side: Side,
    /// Human-readable statement of the inequality.
    pub statement: &'static str,
    pub lower: Option<BoundSide>,
    pub upper: Option<BoundSide>,
    /// Id of the bound this one reverses.
    pub reverses: Option<&'static str>,
    pub needs_p1: bool,
    pub needs_y: bool,
}

impl Bound {
    pub fn sides(&self) -> impl Iterator<Item = (Side, &BoundSide)> {
        self.lower
            .iter()
            .map(|s| (Side::Lower, s))
            .chain(self.upper.iter().map(|s| (Side::Upper, s)))
    }

    pub fn valid(&self, a: &BoundArgs) -> bool {
        self.sides().any(|(_, s)| s.valid(a))
    }

    pub fn sharp_at_zero(&self) -> bool {
        self.sides().any(|(_, s)| s.sharp_at_zero)
    }

    pub fn correct_order_at_infinity(&self) -> bool {
        self.sides().any(|(_, s)| s.correct_order_at_infinity)
    }

    /// Whether the underlying proof claims a strict inequality at these inputs.
    pub fn strict(&self, a: &BoundArgs) -> bool {
        match (self.needs_p1, a.p1) {
            (true, Some(q)) => regions::order_strict(a.p, q),
            _ => true,
        }
    }
}

/// Evaluated side of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SideCheck {
    pub value: f64,
    pub err: f64,
    /// Signed so that positive means the inequality holds.
    pub margin: f64,
    pub budget: f64,
}

impl SideCheck {
    pub fn holds(&self) -> bool {
        self.margin >= -self.budget
    }

    /// `bound / target`.
    pub fn ratio(&self, target: f64) -> f64 {
        self.value / target
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub args: BoundArgs,
    pub valid: bool,
    pub target_value: f64,
    pub target_err: f64,
    pub lower: Option<SideCheck>,
    pub upper: Option<SideCheck>,
    /// Smallest margin over the applicable sides (NaN when no side applies).
    pub margin: f64,
    /// Error budget belonging to the side that attains `margin`.
    pub budget: f64,
    pub strict: bool,
}

impl CheckResult {
    /// True when every applicable side holds within its budget.
    pub fn holds(&self) -> bool {
        self.lower.iter().chain(self.upper.iter()).all(SideCheck::holds)
    }

    /// `margin / |target|`.
    pub fn relative_margin(&self) -> f64 {
        self.margin / self.target_value.abs()
    }
}

macro_rules! side {
    ($req:expr, $valid:expr, $eval:expr, sharp = $sharp:expr, order = $order:expr) => {
        Some(BoundSide {
            requirement: $req,
            sharp_at_zero: $sharp,
            correct_order_at_infinity: $order,
            valid: $valid,
            eval: $eval,
        })
    };
}

const POS: &str = "μ>−3 and |ν|<μ+3";

fn pos(a: &BoundArgs) -> bool {
    regions::positivity(a.p)
}

/// The full registry: B1–B18 and the reversed variants B1R–B4R.
pub fn catalog() -> &'static [Bound] {
    use formulas::*;
    use regions as r;
    static CATALOG: std::sync::OnceLock<Vec<Bound>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(|| {
        let upper = |id, target, statement, s: Option<BoundSide>| Bound {
            id,
            target,
            side: Side::Upper,
            statement,
            lower: None,
            upper: s,
            reverses: None,
            needs_p1: false,
            needs_y: false,
        };
        let lower = |id, target, statement, reverses, s: Option<BoundSide>| Bound {
            id,
            target,
            side: Side::Lower,
            statement,
            lower: s,
            upper: None,
            reverses,
            needs_p1: false,
            needs_y: false,
        };
        let two = |id, target, statement, l: Option<BoundSide>, u: Option<BoundSide>| Bound {
            id,
            target,
            side: Side::TwoSided,
            statement,
            lower: l,
            upper: u,
            reverses: None,
            needs_p1: false,
            needs_y: false,
        };
        use Target::*;
        vec![
            upper(
                "B1",
                TTilde,
                "t̃ < √π 2^(ν−μ−1) Γ(ν+3/2) / (Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · x^(μ−ν) L_ν(x)",
                side!("−3/2<ν<μ", |a| r::struve_nu_forward(a.p), struve_nu, sharp = true, order = false),
            ),
            upper(
                "B2",
                TTilde,
                "t̃ < √π Γ(μ+3/2) / (2 Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · L_μ(x)",
                side!("μ>−3/2 and |μ|>|ν|", |a| r::struve_mu_forward(a.p), struve_mu, sharp = true, order = false),
            ),
            upper(
                "B3",
                TTilde,
                "t̃ < Γ(μ+2) / (Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · I_{μ+1}(x)",
                side!("μ>−2 and |ν|<|μ+1|", |a| r::bessel_forward(a.p), bessel, sharp = true, order = true),
            ),
            Bound {
                needs_p1: true,
                ..upper(
                    "B4",
                    TTilde,
                    "2^μ Γ((μ−ν+3)/2) Γ((μ+ν+3)/2) x^(−μ) t̃_{μ,ν} ≤ the same at (μ₁,ν₁)",
                    side!(
                        "μ≥μ₁>−3, |ν|<μ+3, |ν₁|<μ₁+3 and (μ−μ₁)(μ+μ₁+6)≥ν²−ν₁²",
                        |a| a.p1.is_some_and(|q| r::order_forward(a.p, q)),
                        order,
                        sharp = true,
                        order = false
                    ),
                )
            },
            lower(
                "B5",
                LogDeriv,
                "x t̃′/t̃ > μ+1",
                None,
                side!(POS, pos, log_deriv_floor, sharp = true, order = false),
            ),
            two(
                "B6",
                LogDeriv,
                "|x t̃′/t̃| < √(x²+ν²+2(μ+ν+1) b_{μ,ν}(x))",
                side!(POS, pos, condition_lower, sharp = false, order = false),
                side!(POS, pos, condition_upper, sharp = true, order = true),
            ),
            two(
                "B7",
                TTilde,
                "(x²/((μ+3)²−ν²+x²))^((μ−ν+1)/2) I_ν(x) < t̃ < C_{μ,ν} (x²/((μ+3)²−ν²+x²))^((μ−ν+1)/2) I_ν(x)",
                side!("μ>−2 and −1<ν<μ+1", |a| r::sandwich(a.p), sandwich_lower, sharp = false, order = true),
                side!("μ>−2 and −1<ν<μ+1", |a| r::sandwich(a.p), sandwich_upper, sharp = true, order = true),
            ),
            upper(
                "B8",
                TTilde,
                "t̃ < Γ(μ+1)√(3(2μ+3)) / (2 Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · x I_μ(x) / √(x²+3(2μ+3))",
                side!("μ>−1 and |μ|>|ν|", |a| r::neat(a.p), neat_upper, sharp = true, order = true),
            ),
            two(
                "B9",
                LogDeriv,
                "|x t̃′/t̃| < √((ν+1/2)²+x²) + 2 b_{μ,ν}(x) − 1/2",
                side!("μ>−1 and −1/2≤ν<μ+1", |a| r::prior_condition(a.p) && a.p.mu > -1.0, prior_condition_lower, sharp = false, order = false),
                side!("μ>−3/2 and −1/2≤ν<μ+1", |a| r::prior_condition(a.p), prior_condition_upper, sharp = true, order = true),
            ),
            Bound {
                needs_y: true,
                ..upper(
                    "B10",
                    RatioTwoX,
                    "t̃(x)/t̃(y) < (x/y)^(μ+1) for 0<x<y",
                    side!(POS, |a| pos(a) && a.y.is_some_and(|y| y > a.x), two_x_upper, sharp = true, order = false),
                )
            },
            upper(
                "B11",
                RatioSucc,
                "t̃_{μ,ν}/t̃_{μ−1,ν−1} < x/(μ+ν+1)",
                side!("μ>−3, |ν|<μ+3 and μ+ν+1>0", |a| r::succ_ratio(a.p), succ_upper, sharp = true, order = false),
            ),
            lower(
                "B12",
                TTilde,
                "t̃ > (μ+ν+3) x^μ sinh(x/(μ+ν+3)) / (2^(μ+1) Γ((μ−ν+3)/2) Γ((μ+ν+3)/2))",
                None,
                side!(
                    "μ>−3, |ν|<μ+3 and either ν>max{−μ−2, √(2(μ+3)/5)−μ−3, −5(μ+3)/7} or ν>max{−μ−2, √(2(μ+4)/7)−μ−3, −5(μ+3)/7}",
                    |a| r::sinh(a.p),
                    sinh_lower,
                    sharp = true,
                    order = false
                ),
            ),
            two(
                "B13",
                TuranDelta,
                "2(x/2)^(2μ+2) / ((μ+ν+3)[Γ((μ−ν+3)/2)Γ((μ+ν+3)/2)]²) ≤ Δ ≤ 2 t̃²/(μ+ν+3)",
                side!(POS, pos, turan_leading, sharp = true, order = false),
                side!(POS, pos, turan_square, sharp = true, order = false),
            ),
            two(
                "B14",
                TuranDelta,
                "(1−2b_{μ,ν}(x)) t̃² / (ν+1/2+√((ν+1/2)²+x²)) < Δ < (μ−ν+4) t̃² / (μ+3/2+√((ν+3/2)²+x²))",
                side!("μ>−1 and 0≤ν<μ+1", |a| r::turan_lower(a.p), turan_sqrt_lower, sharp = false, order = false),
                side!("μ>−1 and 1/2≤ν<μ+1", |a| r::turan_upper(a.p), turan_sqrt_upper, sharp = false, order = true),
            ),
            two(
                "B15",
                RatioSucc,
                "x/(ν−1/2+2b_{μ,ν}(x)+√((ν+1/2)²+x²)) < t̃_{μ,ν}/t̃_{μ−1,ν−1} < x/(ν−1/2+√((ν−1/2)²+x²))",
                side!("μ>−1 and 0≤ν<μ+1", |a| r::turan_lower(a.p), ratio_lower, sharp = true, order = false),
                side!("μ>−1/2 and 1/2≤ν<μ+1", |a| r::ratio_upper(a.p), ratio_upper, sharp = false, order = false),
            ),
            upper(
                "B16",
                BFunc,
                "2 b_{μ+1,ν+1}(x) < μ−ν+1",
                side!("μ>−1 and 1/2≤ν<μ+1", |a| r::turan_upper(a.p), b_ceiling, sharp = true, order = false),
            ),
            upper(
                "B17",
                TuranLambdaMu,
                "t̃² − t̃_{μ−1,ν} t̃_{μ+1,ν} ≤ A_{μ,ν} t̃²",
                side!("μ>0 and |ν|<μ+3", |a| r::lambda_mu(a.p), lambda_upper, sharp = true, order = false),
            ),
            upper(
                "B18",
                TuranLambdaNu,
                "t̃² − t̃_{μ,ν−1} t̃_{μ,ν+1} ≤ A_{μ,ν} t̃²",
                side!("μ>−1 and |ν|<μ+3", |a| r::lambda_nu(a.p), lambda_upper, sharp = true, order = false),
            ),
            lower(
                "B1R",
                TTilde,
                "t̃ > √π 2^(ν−μ−1) Γ(ν+3/2) / (Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · x^(μ−ν) L_ν(x)",
                Some("B1"),
                side!(
                    "|ν|<μ+3 for −3<μ≤−3/2, or μ<ν<μ+3 for μ>−3/2",
                    |a| r::struve_nu_reverse(a.p),
                    struve_nu,
                    sharp = true,
                    order = false
                ),
            ),
            lower(
                "B2R",
                TTilde,
                "t̃ > √π Γ(μ+3/2) / (2 Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · L_μ(x)",
                Some("B2"),
                side!("μ>−3/2 and |μ|<|ν|<μ+3", |a| r::struve_mu_reverse(a.p), struve_mu, sharp = true, order = false),
            ),
            lower(
                "B3R",
                TTilde,
                "t̃ > Γ(μ+2) / (Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)) · I_{μ+1}(x)",
                Some("B3"),
                side!("μ>−2 and |μ+1|<|ν|<μ+3", |a| r::bessel_reverse(a.p), bessel, sharp = true, order = true),
            ),
            Bound {
                needs_p1: true,
                ..lower(
                    "B4R",
                    TTilde,
                    "2^μ Γ((μ−ν+3)/2) Γ((μ+ν+3)/2) x^(−μ) t̃_{μ,ν} ≥ the same at (μ₁,ν₁)",
                    Some("B4"),
                    side!(
                        "μ₁≥μ>−3, |ν|<μ+3, |ν₁|<μ₁+3 and (μ₁−μ)(μ₁+μ+6)≥ν₁²−ν²",
                        |a| a.p1.is_some_and(|q| r::order_reverse(a.p, q)),
                        order,
                        sharp = true,
                        order = false
                    ),
                )
            },
        ]
    })
}

pub fn lookup(id: &str) -> Result<&'static Bound> {
    catalog()
        .iter()
        .find(|b| b.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

fn validate_args(b: &Bound, a: &BoundArgs) -> Result<()> {
    a.p.require_finite()?;
    if !(a.x > 0.0 && a.x.is_finite()) {
        return Err(Error::Domain(format!("{} needs finite x > 0, got {}", b.id, a.x)));
    }
    if b.needs_p1 {
        match a.p1 {
            Some(q) => q.require_finite()?,
            None => {
                return Err(Error::Domain(format!(
                    "{} needs a second parameter point (μ₁, ν₁)",
                    b.id
                )))
            }
        }
    }
    if b.needs_y {
        match a.y {
            Some(y) if y.is_finite() && y > a.x => {}
            Some(y) => {
                return Err(Error::Domain(format!(
                    "{} needs finite y > x, got x={}, y={y}",
                    b.id, a.x
                )))
            }
            None => return Err(Error::Domain(format!("{} needs a second argument y > x", b.id))),
        }
    }
    Ok(())
}

/// Evaluates bound `id` at the given inputs.
///
/// A point outside every validity region is not an error: the result has
/// `valid = false` and no side values.
pub fn check(id: &str, args: &BoundArgs, opts: &SeriesOptions) -> Result<CheckResult> {
    check_bound(lookup(id)?, args, opts)
}

pub fn check_bound(b: &Bound, args: &BoundArgs, opts: &SeriesOptions) -> Result<CheckResult> {
    validate_args(b, args)?;
    let valid = b.valid(args);
    let mut out = CheckResult {
        id: b.id,
        args: *args,
        valid,
        target_value: f64::NAN,
        target_err: f64::NAN,
        lower: None,
        upper: None,
        margin: f64::NAN,
        budget: f64::NAN,
        strict: b.strict(args),
    };
    if !valid {
        return Ok(out);
    }
    let target = b.target.evaluate(args, opts)?;
    out.target_value = target.value;
    out.target_err = target.err;
    let side_check = |s: &BoundSide, sign: f64| -> Result<Option<SideCheck>> {
        if !s.valid(args) {
            return Ok(None);
        }
        let v = s.evaluate(args, opts)?;
        Ok(Some(SideCheck {
            value: v.value,
            err: v.err,
            margin: sign * (v.value - target.value),
            budget: BUDGET_FACTOR * (v.err + target.err),
        }))
    };
    if let Some(s) = &b.lower {
        out.lower = side_check(s, -1.0)?;
    }
    if let Some(s) = &b.upper {
        out.upper = side_check(s, 1.0)?;
    }
    if let Some(worst) = out
        .lower
        .iter()
        .chain(out.upper.iter())
        .min_by(|l, r| l.margin.total_cmp(&r.margin))
    {
        out.margin = worst.margin;
        out.budget = worst.budget;
    }
    Ok(out)
}

/// C_{μ,ν} of the two-sided Bessel sandwich (B7).
pub fn sandwich_constant(p: ParamPoint) -> Result<f64> {
    p.require_finite()?;
    Ok(formulas::c_const(p)?.value)
}

/// A_{μ,ν} of the λ-normalized Turán bounds (B17, B18).
pub fn lambda_constant(p: ParamPoint) -> Result<f64> {
    p.require_finite()?;
    Ok(formulas::a_const(p)?.value)
}

/// Δ_{μ,ν}(x) = t̃_{μ,ν}² − t̃_{μ−1,ν−1} t̃_{μ+1,ν+1} with its propagated error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TuranDelta {
    pub delta: f64,
    pub err: f64,
}

pub fn turan_delta(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<TuranDelta> {
    p.require_positive("Δ_{μ,ν}")?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("Δ_{{μ,ν}} needs finite x > 0, got {x}")));
    }
    let d = formulas::turan_delta(p, x, opts)?;
    Ok(TuranDelta {
        delta: d.value,
        err: d.err,
    })
}

/// x t̃′_{μ,ν}(x)/t̃_{μ,ν}(x) as an error-carrying estimate.
pub fn log_derivative(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Est> {
    p.require_positive("x t̃′/t̃")?;
    formulas::log_deriv(p, x, opts)
}
