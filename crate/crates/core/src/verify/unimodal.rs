//! Locating the turning point of Q_{μ,ν}(x) = x^(−μ) t̃_{μ,ν}(x) / sinh(x/(μ+ν+3)).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::series::SeriesOptions;
use crate::special::lommel_t_tilde;

use super::grid::log_space;

/// Number of log-spaced scan points.
pub const SCAN_POINTS: usize = 200;

/// Relative width at which bisection stops.
pub const X0_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Turning {
    pub x0: f64,
    /// dQ/dx < 0 at every scan point below `x0`.
    pub decreasing_before: bool,
    /// dQ/dx > 0 at every scan point above `x0`.
    pub increasing_after: bool,
    /// The interval actually scanned (wider than requested after a retry).
    pub lo: f64,
    pub hi: f64,
}

/// ln sinh y for y > 0, without overflow.
fn ln_sinh(y: f64) -> f64 {
    if y < 1.0 {
        y.sinh().ln()
    } else {
        y + (-(-2.0 * y).exp()).ln_1p() - std::f64::consts::LN_2
    }
}

/// ln Q_{μ,ν}(x).
pub fn ln_q(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<f64> {
    let t = lommel_t_tilde(p, x, o)?;
    Ok(-p.mu * x.ln() + t.value.ln() - ln_sinh(x / (p.mu + p.nu + 3.0)))
}

/// d ln Q/dx by a central difference with step max(1e−6, 1e−4 x),
/// Richardson-extrapolated once.
pub fn ln_q_slope(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<f64> {
    let h = (1e-6f64).max(1e-4 * x).min(0.5 * x);
    let central = |h: f64| -> Result<f64> { Ok((ln_q(p, x + h, o)? - ln_q(p, x - h, o)?) / (2.0 * h)) };
    let d1 = central(h)?;
    let d2 = central(h / 2.0)?;
    Ok((4.0 * d2 - d1) / 3.0)
}

fn scan(p: ParamPoint, lo: f64, hi: f64, o: &SeriesOptions) -> Result<Vec<(f64, f64)>> {
    log_space(lo, hi, SCAN_POINTS)
        .into_iter()
        .map(|x| Ok((x, ln_q_slope(p, x, o)?)))
        .collect()
}

fn locate_on(p: ParamPoint, lo: f64, hi: f64, o: &SeriesOptions) -> Result<Option<Turning>> {
    let pts = scan(p, lo, hi, o)?;
    let Some(i) = pts.windows(2).position(|w| w[0].1.signum() != w[1].1.signum()) else {
        return Ok(None);
    };
    let (mut a, mut b) = (pts[i].0, pts[i + 1].0);
    let sign_a = pts[i].1.signum();
    while (b - a) > X0_REL_TOL * a {
        let m = 0.5 * (a + b);
        if ln_q_slope(p, m, o)?.signum() == sign_a {
            a = m;
        } else {
            b = m;
        }
    }
    let x0 = 0.5 * (a + b);
    Ok(Some(Turning {
        x0,
        decreasing_before: pts[..=i].iter().all(|&(_, d)| d < 0.0),
        increasing_after: pts[i + 1..].iter().all(|&(_, d)| d > 0.0),
        lo,
        hi,
    }))
}

/// Finds the first sign change of dQ/dx on `[lo, hi]`, widening once to
/// `[lo/10, 10 hi]` before giving up.
///
/// The flags report what the scan saw; they are not forced to agree with the
/// decreasing-then-increasing shape expected for −μ−2 < ν < −5(μ+3)/7.
pub fn unimodality_locate(p: ParamPoint, lo: f64, hi: f64, o: &SeriesOptions) -> Result<Turning> {
    p.require_positive("Q_{μ,ν}")?;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain(format!("need 0 < x_lo < x_hi, got [{lo}, {hi}]")));
    }
    if let Some(t) = locate_on(p, lo, hi, o)? {
        return Ok(t);
    }
    let (wlo, whi) = (lo / 10.0, hi * 10.0);
    locate_on(p, wlo, whi, o)?.ok_or(Error::NoSignChange { lo: wlo, hi: whi })
}
