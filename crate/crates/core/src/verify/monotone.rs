//! Pairwise monotonicity sweeps of ratio functions on sampled grids.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::regions as r;
use crate::bounds::BUDGET_FACTOR;
use crate::error::{Error, Result};
use crate::est::Est;
use crate::params::ParamPoint;
use crate::series::SeriesOptions;
use crate::special::{bessel_i, lommel_t_tilde, lommel_t_tilde_prime, struve_l};

use super::grid::GridSpec;
use super::report::SweepReport;
use super::sampling::{Sampler, PARAM_HI, PARAM_LO};

/// Fraction of consecutive pairs that must be strictly monotone beyond the
/// error budget for a strict claim.
pub const STRICT_FRACTION: f64 = 0.9;

/// The δ grid of the order-shift claim: 0.1, 0.2, …, 5.
pub fn delta_grid() -> Vec<f64> {
    (1..=50).map(|i| i as f64 / 10.0).collect()
}

/// Number of x values the δ sweep is run at.
const DELTA_SWEEP_X: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Claim {
    /// x^(μ−ν) L_ν / t̃_{μ,ν}.
    StruveNu,
    /// L_μ / t̃_{μ,ν}.
    StruveMu,
    /// I_{μ+1} / t̃_{μ,ν}.
    Bessel,
    /// x^(μ₁−μ) t̃_{μ,ν} / t̃_{μ₁,ν₁}.
    Order,
    /// x t̃′_{μ,ν} / t̃_{μ,ν}.
    LogDerivative,
    /// δ ↦ t̃_{μ+δ+1,ν+δ+1}(x) / t̃_{μ+δ,ν+δ}(x).
    OrderShift,
    /// x^(−μ) t̃_{μ,ν} / sinh(x/(μ+ν+3)).
    Sinh,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::StruveNu,
        Claim::StruveMu,
        Claim::Bessel,
        Claim::Order,
        Claim::LogDerivative,
        Claim::OrderShift,
        Claim::Sinh,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::StruveNu => "T1.i",
            Claim::StruveMu => "T1.ii",
            Claim::Bessel => "T1.iii",
            Claim::Order => "T1.iv",
            Claim::LogDerivative => "T1.v",
            Claim::OrderShift => "T1.vi",
            Claim::Sinh => "P3.4",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Claim::StruveNu => "x^(μ−ν) L_ν(x)/t̃_{μ,ν}(x)",
            Claim::StruveMu => "L_μ(x)/t̃_{μ,ν}(x)",
            Claim::Bessel => "I_{μ+1}(x)/t̃_{μ,ν}(x)",
            Claim::Order => "x^(μ₁−μ) t̃_{μ,ν}(x)/t̃_{μ₁,ν₁}(x)",
            Claim::LogDerivative => "x t̃′_{μ,ν}(x)/t̃_{μ,ν}(x)",
            Claim::OrderShift => "δ ↦ t̃_{μ+δ+1,ν+δ+1}(x)/t̃_{μ+δ,ν+δ}(x)",
            Claim::Sinh => "x^(−μ) t̃_{μ,ν}(x)/sinh(x/(μ+ν+3))",
        }
    }

    /// Text of the region the claim is stated on.
    pub fn requirement(&self) -> &'static str {
        match self {
            Claim::StruveNu => "−3/2<ν<μ (increasing), or |ν|<μ+3 with −3<μ≤−3/2 or μ<ν<μ+3 with μ>−3/2 (decreasing)",
            Claim::StruveMu => "μ>−3/2 and |μ|>|ν| (increasing), or μ>−3/2 and |μ|<|ν|<μ+3 (decreasing)",
            Claim::Bessel => "μ>−2 and |ν|<|μ+1| (increasing), or μ>−2 and |μ+1|<|ν|<μ+3 (decreasing)",
            Claim::Order => "both points in μ>−3, |ν|<μ+3 and (μ−μ₁)(μ+μ₁+6)≥ν²−ν₁² in one of the two orders",
            Claim::LogDerivative | Claim::OrderShift => "μ>−3 and |ν|<μ+3",
            Claim::Sinh => "μ>−3, |ν|<μ+3 and one of the sinh max-conditions on ν",
        }
    }

    fn needs_pairs(&self) -> bool {
        matches!(self, Claim::Order)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        }
    }
}

/// Direction of the claim at `p` (and `q` for the order claim) and whether
/// it is strict; `None` outside the claim's regions.
pub fn claimed_direction(claim: Claim, p: ParamPoint, q: Option<ParamPoint>) -> Option<(Direction, bool)> {
    use Direction::*;
    if !p.is_finite() {
        return None;
    }
    match claim {
        Claim::StruveNu if r::struve_nu_forward(p) => Some((Increasing, true)),
        Claim::StruveNu if r::struve_nu_reverse(p) => Some((Decreasing, true)),
        Claim::StruveMu if r::struve_mu_forward(p) => Some((Increasing, true)),
        Claim::StruveMu if r::struve_mu_reverse(p) => Some((Decreasing, true)),
        Claim::Bessel if r::bessel_forward(p) => Some((Increasing, true)),
        Claim::Bessel if r::bessel_reverse(p) => Some((Decreasing, true)),
        // The quotient x^(μ₁−μ) t̃/t̃₁ has coefficient ratios that decrease on
        // the forward region, so it is decreasing there (and increasing on the
        // mirrored region).
        Claim::Order => {
            let q = q?;
            let strict = r::order_strict(p, q);
            if r::order_forward(p, q) {
                Some((Decreasing, strict))
            } else if r::order_reverse(p, q) {
                Some((Increasing, strict))
            } else {
                None
            }
        }
        Claim::LogDerivative if r::positivity(p) => Some((Increasing, true)),
        Claim::OrderShift if r::positivity(p) => Some((Decreasing, true)),
        Claim::Sinh if r::sinh(p) => Some((Increasing, true)),
        _ => None,
    }
}

fn est(e: crate::series::Eval) -> Est {
    Est::from(e)
}

/// The claim's ratio at `x` (the δ-shift claim at δ = 0).
pub fn claim_ratio(claim: Claim, p: ParamPoint, q: Option<ParamPoint>, x: f64, o: &SeriesOptions) -> Result<Est> {
    let t = || lommel_t_tilde(p, x, o).map(est);
    let xe = Est::exact(x);
    Ok(match claim {
        Claim::StruveNu => xe.powf(p.mu - p.nu) * est(struve_l(p.nu, x, o)?) / t()?,
        Claim::StruveMu => est(struve_l(p.mu, x, o)?) / t()?,
        Claim::Bessel => est(bessel_i(p.mu + 1.0, x, o)?) / t()?,
        Claim::Order => {
            let q = q.ok_or_else(|| Error::Domain("T1.iv needs a second parameter point".into()))?;
            xe.powf(q.mu - p.mu) * t()? / est(lommel_t_tilde(q, x, o)?)
        }
        Claim::LogDerivative => xe * est(lommel_t_tilde_prime(p, x, o)?) / t()?,
        Claim::OrderShift => order_shift_ratio(p, 0.0, x, o)?,
        Claim::Sinh => {
            let arg = Est::rounded(x / (p.mu + p.nu + 3.0), 1.0);
            xe.powf(-p.mu) * t()? / arg.sinh()
        }
    })
}

/// t̃_{μ+δ+1,ν+δ+1}(x) / t̃_{μ+δ,ν+δ}(x).
pub fn order_shift_ratio(p: ParamPoint, delta: f64, x: f64, o: &SeriesOptions) -> Result<Est> {
    let base = p.shift(delta);
    Ok(est(lommel_t_tilde(base.shift(1.0), x, o)?) / est(lommel_t_tilde(base, x, o)?))
}

/// The T1.iv parameter pairs: ten forward pairs covering strict and equality
/// cases, followed by the same pairs with the roles swapped.
pub fn order_pairs() -> Vec<(ParamPoint, ParamPoint)> {
    let pp = ParamPoint::new;
    let forward = [
        (pp(2.0, 1.0), pp(1.0, 0.5)),
        // μ = μ₁ and ν² = ν₁²: identical functions.
        (pp(1.0, 0.5), pp(1.0, -0.5)),
        (pp(0.0, 0.3), pp(0.0, -0.3)),
        // μ = μ₁, strict in ν.
        (pp(0.0, 0.0), pp(0.0, 1.0)),
        (pp(1.0, 0.0), pp(0.0, 0.0)),
        // (μ−μ₁)(μ+μ₁+6) = ν²−ν₁² with μ > μ₁.
        (pp(1.0, 7.25f64.sqrt()), pp(0.0, 0.5)),
        (pp(-1.0, 0.5), pp(-2.0, 0.2)),
        (pp(3.0, -2.0), pp(-2.5, 0.1)),
        (pp(0.5, 2.0), pp(0.0, 1.5)),
        (pp(5.0, -6.0), pp(4.0, -5.0)),
    ];
    forward
        .iter()
        .copied()
        .chain(forward.iter().map(|&(p, q)| (q, p)))
        .collect()
}

/// Points named in the documentation examples, per claim.
fn example_points(claim: Claim) -> Vec<ParamPoint> {
    let pp = ParamPoint::new;
    match claim {
        Claim::StruveNu => vec![pp(2.0, 1.0), pp(-2.0, 0.5)],
        Claim::StruveMu => vec![pp(2.0, 1.0), pp(0.5, 1.5)],
        Claim::Bessel => vec![pp(0.0, 0.5), pp(0.0, 1.5)],
        Claim::LogDerivative => vec![pp(1.0, 0.0)],
        Claim::OrderShift => vec![pp(0.0, 0.0), pp(1.0, 0.5)],
        Claim::Sinh => vec![pp(0.0, 0.0)],
        Claim::Order => Vec::new(),
    }
}

type Region = fn(ParamPoint) -> bool;

fn direction_regions(claim: Claim) -> Vec<Region> {
    match claim {
        Claim::StruveNu => vec![r::struve_nu_forward, r::struve_nu_reverse],
        Claim::StruveMu => vec![r::struve_mu_forward, r::struve_mu_reverse],
        Claim::Bessel => vec![r::bessel_forward, r::bessel_reverse],
        Claim::LogDerivative | Claim::OrderShift => vec![r::positivity],
        Claim::Sinh => vec![r::sinh],
        Claim::Order => Vec::new(),
    }
}

/// Default pool: 4 near-boundary and 4 interior points per direction, plus
/// the example points. Every point lies inside the positivity region.
pub fn default_params(claim: Claim, seed: u64) -> Vec<ParamPoint> {
    let mut out = example_points(claim);
    for (i, region) in direction_regions(claim).into_iter().enumerate() {
        let valid = move |v: &[f64]| {
            let p = ParamPoint::new(v[0], v[1]);
            region(p) && r::positivity(p)
        };
        let salt = (claim as u64) << 8 | i as u64;
        let mut s = Sampler::new(
            seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15),
            &PARAM_LO,
            &PARAM_HI,
            &valid,
        );
        out.extend(s.pool(4, 4).into_iter().map(|v| ParamPoint::new(v[0], v[1])));
    }
    out
}

/// One monotone series: consecutive values along an axis with their errors.
struct Series {
    p: ParamPoint,
    /// `x` recorded with each pair (the left end of the pair for x-sweeps).
    xs: Vec<f64>,
    values: Vec<Est>,
    direction: Direction,
    strict: bool,
}

struct PairMargin {
    x: f64,
    margin: f64,
    budget: f64,
}

fn pair_margins(s: &Series) -> Vec<PairMargin> {
    s.values
        .windows(2)
        .zip(&s.xs)
        .map(|(w, &x)| {
            let scale = w[0].value.abs().max(w[1].value.abs());
            let margin = s.direction.sign() * (w[1].value - w[0].value) / scale;
            let budget = BUDGET_FACTOR * (w[0].err + w[1].err) / scale;
            PairMargin { x, margin, budget }
        })
        .collect()
}

/// Records every pair of every series. A pair is a violation when it moves
/// against the claimed direction beyond its budget; if fewer than
/// [`STRICT_FRACTION`] of the pairs of strict series (over the whole sweep)
/// move strictly beyond budget, the weak pairs are reported as well.
fn accumulate(rep: &mut SweepReport, series: &[Series]) {
    let margins: Vec<Vec<PairMargin>> = series.iter().map(pair_margins).collect();
    let (strict_pairs, total) = series
        .iter()
        .zip(&margins)
        .filter(|(s, _)| s.strict)
        .flat_map(|(_, m)| m)
        .fold((0usize, 0usize), |(k, n), m| {
            (k + usize::from(m.margin > m.budget), n + 1)
        });
    let strict_ok = strict_pairs as f64 >= STRICT_FRACTION * total as f64;
    for (s, ms) in series.iter().zip(&margins) {
        for m in ms {
            let weak = s.strict && !strict_ok && m.margin <= m.budget;
            rep.record(s.p.mu, s.p.nu, m.x, m.margin, m.margin < -m.budget || weak);
        }
    }
}

fn x_series(claim: Claim, p: ParamPoint, q: Option<ParamPoint>, xs: &[f64], o: &SeriesOptions) -> Result<Series> {
    let (direction, strict) =
        claimed_direction(claim, p, q).ok_or_else(|| p.region_error(claim.id(), claim.requirement()))?;
    let values = xs
        .iter()
        .map(|&x| claim_ratio(claim, p, q, x, o))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series {
        p,
        xs: xs.to_vec(),
        values,
        direction,
        strict,
    })
}

fn delta_series(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<Series> {
    let (direction, strict) = claimed_direction(Claim::OrderShift, p, None)
        .ok_or_else(|| p.region_error(Claim::OrderShift.id(), Claim::OrderShift.requirement()))?;
    let deltas = delta_grid();
    let values = deltas
        .iter()
        .map(|&d| order_shift_ratio(p, d, x, o))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series {
        p,
        xs: vec![x; deltas.len()],
        values,
        direction,
        strict,
    })
}

/// About `n` x values spread evenly over the grid.
fn subsample(xs: &[f64], n: usize) -> Vec<f64> {
    if xs.len() <= n {
        return xs.to_vec();
    }
    (0..n).map(|i| xs[i * (xs.len() - 1) / (n - 1)]).collect()
}

/// Checks pairwise monotonicity of the claim's ratio over `grid`.
///
/// Grid parameter points must lie in one of the claim's regions; an empty
/// parameter list (or pair list for T1.iv) selects the default pool.
pub fn monotonicity_sweep(claim: Claim, grid: &GridSpec, o: &SeriesOptions) -> Result<SweepReport> {
    grid.validate()?;
    o.validate()?;
    let series: Vec<Series> = if claim.needs_pairs() {
        let pairs = if grid.pairs.is_empty() {
            order_pairs()
        } else {
            grid.pairs.clone()
        };
        pairs
            .par_iter()
            .map(|&(p, q)| x_series(claim, p, Some(q), &grid.x_points, o))
            .collect::<Result<_>>()?
    } else {
        let params = if grid.param_points.is_empty() {
            default_params(claim, grid.seed)
        } else {
            grid.param_points.clone()
        };
        if claim == Claim::OrderShift {
            let xs = subsample(&grid.x_points, DELTA_SWEEP_X);
            let jobs: Vec<(ParamPoint, f64)> = params.iter().flat_map(|&p| xs.iter().map(move |&x| (p, x))).collect();
            jobs.par_iter()
                .map(|&(p, x)| delta_series(p, x, o))
                .collect::<Result<_>>()?
        } else {
            params
                .par_iter()
                .map(|&p| x_series(claim, p, None, &grid.x_points, o))
                .collect::<Result<_>>()?
        }
    };
    let mut rep = SweepReport::new(claim.id());
    accumulate(&mut rep, &series);
    Ok(rep.finish())
}
