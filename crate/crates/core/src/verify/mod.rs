//! Numerical certification of the monotonicity claims and inequalities:
//! grids, parameter pools, sweeps, named suites and report output.

pub mod grid;
pub mod inequality;
pub mod monotone;
pub mod report;
pub(crate) mod sampling;
pub mod sequence;
pub mod unimodal;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{catalog, lookup, turan_delta};
use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::series::SeriesOptions;
use crate::special::lommel_t_tilde;

pub use grid::{GridSpec, Spacing};
pub use inequality::{inequality_sweep, sweep_bound};
pub use monotone::{monotonicity_sweep, Claim, Direction};
pub use report::{to_json, write_csv, write_reports, SweepReport, Violation};
pub use sequence::{sequence_ratio_check, CoeffPair, Monotone, SequenceRatio};
pub use unimodal::{unimodality_locate, Turning};

/// Number of coefficients examined by the sequence-ratio reports.
pub const SEQUENCE_K: usize = 200;

/// Id of the Δ/t̃² → 2/(μ+ν+3) limit check.
pub const TURAN_LIMIT_ID: &str = "turan_limit";
/// Argument and absolute tolerance of the limit check.
pub const TURAN_LIMIT_X: f64 = 1e-4;
pub const TURAN_LIMIT_TOL: f64 = 1e-3;

/// Id of the turning-point check for the sinh quotient.
pub const UNIMODAL_ID: &str = "R3.5";
/// A point of the non-monotone regime −μ−2 < ν < −5(μ+3)/7.
pub const UNIMODAL_POINT: ParamPoint = ParamPoint::new(2.0, -3.8);

const TURAN_IDS: [&str; 5] = ["B13", "B14", "B16", "B17", "B18"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Turan,
    Monotonicity,
    Ratios,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::All, Suite::Turan, Suite::Monotonicity, Suite::Ratios];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Turan => "turan",
            Suite::Monotonicity => "monotonicity",
            Suite::Ratios => "ratios",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Every registered claim id, in suite order. Each has exactly one sweep.
pub fn claim_ids() -> Vec<String> {
    let mut ids: Vec<String> = catalog().iter().map(|b| b.id.to_string()).collect();
    ids.extend(Claim::ALL.iter().map(|c| c.id().to_string()));
    ids.extend(CoeffPair::ALL.iter().map(|p| sequence_id(*p)));
    ids.push(TURAN_LIMIT_ID.to_string());
    ids.push(UNIMODAL_ID.to_string());
    ids
}

fn sequence_id(p: CoeffPair) -> String {
    format!("ratio:{}", p.id())
}

/// Points at which the Turán limit is checked.
pub fn turan_limit_points() -> Vec<ParamPoint> {
    [(0.0, 0.0), (1.0, 0.5), (-1.0, 0.5), (2.0, -1.0), (0.5, 0.5)]
        .into_iter()
        .map(ParamPoint::from)
        .collect()
}

/// Δ_{μ,ν}(x)/t̃_{μ,ν}(x)².
pub fn turan_ratio(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<f64> {
    let d = turan_delta(p, x, o)?;
    let t = lommel_t_tilde(p, x, o)?.value;
    Ok(d.delta / (t * t))
}

/// Checks |Δ/t̃² − 2/(μ+ν+3)| ≤ [`TURAN_LIMIT_TOL`] at x = [`TURAN_LIMIT_X`];
/// margins are `tol − |difference|`.
pub fn turan_limit_report(params: &[ParamPoint], o: &SeriesOptions) -> Result<SweepReport> {
    let mut rep = SweepReport::new(TURAN_LIMIT_ID);
    for &p in params {
        let ratio = turan_ratio(p, TURAN_LIMIT_X, o)?;
        let limit = 2.0 / (p.mu + p.nu + 3.0);
        let margin = TURAN_LIMIT_TOL - (ratio - limit).abs();
        rep.record(p.mu, p.nu, TURAN_LIMIT_X, margin, margin < 0.0);
    }
    Ok(rep.finish())
}

/// Locates the turning point of the sinh quotient at `p` on `[lo, hi]` and
/// records one point with margin +1 (decreasing-then-increasing) or −1.
pub fn unimodal_report(p: ParamPoint, lo: f64, hi: f64, o: &SeriesOptions) -> Result<SweepReport> {
    let mut rep = SweepReport::new(UNIMODAL_ID);
    match unimodality_locate(p, lo, hi, o) {
        Ok(t) => {
            let ok = t.decreasing_before && t.increasing_after;
            rep.record(p.mu, p.nu, t.x0, if ok { 1.0 } else { -1.0 }, !ok);
        }
        Err(Error::NoSignChange { .. }) => rep.record(p.mu, p.nu, f64::NAN, -1.0, true),
        Err(e) => return Err(e),
    }
    Ok(rep.finish())
}

/// Runs the sweep registered under `id` on `grid`.
///
/// Bounds and monotonicity claims use the grid's x points and parameters;
/// the sequence, limit and turning-point checks use their fixed points.
pub fn sweep(id: &str, grid: &GridSpec, o: &SeriesOptions) -> Result<SweepReport> {
    let id = id.trim();
    if let Ok(b) = lookup(id) {
        return inequality::sweep_bound(b, grid, o);
    }
    if let Ok(c) = id.parse::<Claim>() {
        return monotonicity_sweep(c, grid, o);
    }
    if let Some(pair) = id.strip_prefix("ratio:") {
        return sequence::sequence_report(pair.parse()?, SEQUENCE_K);
    }
    if id.eq_ignore_ascii_case(TURAN_LIMIT_ID) {
        let params = if grid.param_points.is_empty() {
            turan_limit_points()
        } else {
            grid.param_points.clone()
        };
        return turan_limit_report(&params, o);
    }
    if id.eq_ignore_ascii_case(UNIMODAL_ID) {
        let p = grid.param_points.first().copied().unwrap_or(UNIMODAL_POINT);
        let lo = grid.x_points.first().copied().unwrap_or(1e-3);
        let hi = grid.x_points.last().copied().unwrap_or(40.0);
        return unimodal_report(p, lo, hi, o);
    }
    Err(Error::UnknownId(id.to_string()))
}

/// Default grid for a claim id: the inequality grid for catalog bounds,
/// the 60-point grid for everything else.
pub fn default_grid(id: &str, seed: u64) -> GridSpec {
    let g = if lookup(id).is_ok() {
        GridSpec::inequality_default()
    } else {
        GridSpec::default()
    };
    g.with_seed(seed)
}

/// Ids run by a named suite.
pub fn suite_ids(name: Suite) -> Vec<String> {
    match name {
        Suite::All => claim_ids(),
        Suite::Turan => TURAN_IDS
            .iter()
            .map(|s| s.to_string())
            .chain([TURAN_LIMIT_ID.to_string()])
            .collect(),
        Suite::Monotonicity => Claim::ALL.iter().map(|c| c.id().to_string()).collect(),
        Suite::Ratios => CoeffPair::ALL.iter().map(|p| sequence_id(*p)).collect(),
    }
}

/// Runs every id of the suite on its default grid, in parallel; reports come
/// back in suite order.
pub fn suite(name: Suite, seed: u64, o: &SeriesOptions) -> Result<Vec<SweepReport>> {
    suite_ids(name)
        .par_iter()
        .map(|id| sweep(id, &default_grid(id, seed), o))
        .collect()
}
