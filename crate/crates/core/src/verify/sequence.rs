//! Discrete form of the monotone-ratio argument: the sign pattern of
//! `q_{k+1}/q_k − 1` for the quotient `q_k` of two coefficient sequences.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::regions::{self, sinh_quadratic};
use crate::coeffs::CoeffFamily;
use crate::error::{Error, Result};
use crate::params::ParamPoint;

use super::report::SweepReport;

/// Numerator/denominator pairs of coefficient sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoeffPair {
    /// α_{ν,k}/β_{μ,ν,k}: x^(μ−ν) L_ν / t̃.
    StruveNu,
    /// α_{μ,k}/β_{μ,ν,k}: L_μ / t̃.
    StruveMu,
    /// γ_{μ,k}/β_{μ,ν,k}: I_{μ+1} / t̃.
    Bessel,
    /// δ_{μ,ν,k}/β_{μ,ν,k}: x t̃′ / t̃.
    Derivative,
    /// β_{μ,ν,k}/ε_{μ,ν,k}: x^(−μ) t̃ / sinh(x/(μ+ν+3)).
    Sinh,
    /// β_{μ,ν,k}/β_{μ₁,ν₁,k}: x^(μ₁−μ) t̃_{μ,ν} / t̃_{μ₁,ν₁}.
    Order,
}

impl CoeffPair {
    pub const ALL: [CoeffPair; 6] = [
        CoeffPair::StruveNu,
        CoeffPair::StruveMu,
        CoeffPair::Bessel,
        CoeffPair::Derivative,
        CoeffPair::Sinh,
        CoeffPair::Order,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            CoeffPair::StruveNu => "struve_nu/beta",
            CoeffPair::StruveMu => "struve_mu/beta",
            CoeffPair::Bessel => "bessel/beta",
            CoeffPair::Derivative => "delta/beta",
            CoeffPair::Sinh => "beta/epsilon",
            CoeffPair::Order => "beta/beta1",
        }
    }

    pub fn needs_p1(&self) -> bool {
        matches!(self, CoeffPair::Order)
    }
}

impl fmt::Display for CoeffPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CoeffPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s
            .trim()
            .replace('β', "beta")
            .replace('δ', "delta")
            .replace('ε', "epsilon")
            .replace('₁', "1");
        CoeffPair::ALL
            .into_iter()
            .find(|p| p.id() == norm)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotone {
    Inc,
    Dec,
    Constant,
    NonMonotone,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceRatio {
    pub pair: CoeffPair,
    pub monotone: Monotone,
    /// First index k at which the sign of `q_{k+1} − q_k` differs from its sign at k = 0.
    pub first_break: Option<usize>,
    /// For a pattern with a single change of direction, the index m at
    /// which `q_{k+1} − q_k` changes sign for good.
    pub turning_index: Option<usize>,
    /// Whether the step ratios generated by the coefficient recurrences give
    /// the same signs as the closed forms (ignoring |ratio − 1| < 1e−12).
    pub recurrence_agrees: bool,
}

/// Sign of `q_{k+1} − q_k` from the closed-form expression of the ratio.
fn closed_form_sign(pair: CoeffPair, p: ParamPoint, q: ParamPoint, k: f64) -> f64 {
    let (mu, nu) = (p.mu, p.nu);
    let a = k + (mu - nu + 3.0) / 2.0;
    let b = k + (mu + nu + 3.0) / 2.0;
    let s = match pair {
        CoeffPair::StruveNu => (mu - nu) * (4.0 * k + mu + nu + 6.0) / ((2.0 * k + 3.0) * (2.0 * k + 2.0 * nu + 3.0)),
        CoeffPair::StruveMu => (mu - nu) * (mu + nu) / ((2.0 * k + 3.0) * (2.0 * k + 2.0 * mu + 3.0)),
        CoeffPair::Bessel => (mu + 1.0 - nu) * (mu + 1.0 + nu) / (4.0 * (k + 1.0) * (k + mu + 2.0)),
        // q_k = 2k + μ + 1, so q_{k+1} − q_k = 2.
        CoeffPair::Derivative => 2.0,
        CoeffPair::Sinh => sinh_quadratic(p, k) / (a * b),
        CoeffPair::Order => {
            let lin = k * (q.mu - mu) + ((q.mu - mu) * (q.mu + mu + 6.0) - (q.nu * q.nu - nu * nu)) / 4.0;
            lin / (a * b)
        }
    };
    if s > 0.0 {
        1.0
    } else if s < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `q_{k+1}/q_k` from the coefficient step ratios, or `None` when the
/// quotient is not a ratio of positive sequences.
fn recurrence_ratio(pair: CoeffPair, p: ParamPoint, q: ParamPoint, k: usize) -> Option<f64> {
    let beta = CoeffFamily::Lommel { mu: p.mu, nu: p.nu };
    let num = match pair {
        CoeffPair::StruveNu => CoeffFamily::Struve { nu: p.nu },
        CoeffPair::StruveMu => CoeffFamily::Struve { nu: p.mu },
        CoeffPair::Bessel => CoeffFamily::Bessel { mu: p.mu },
        CoeffPair::Derivative => return None,
        CoeffPair::Sinh => return Some(beta.step_ratio(k) / CoeffFamily::Sinh { mu: p.mu, nu: p.nu }.step_ratio(k)),
        CoeffPair::Order => return Some(beta.step_ratio(k) / CoeffFamily::Lommel { mu: q.mu, nu: q.nu }.step_ratio(k)),
    };
    Some(num.step_ratio(k) / beta.step_ratio(k))
}

/// Classifies `{q_k}` for `k ≤ k_max` from the closed-form step ratios.
pub fn sequence_ratio_check(
    pair: CoeffPair,
    p: ParamPoint,
    p1: Option<ParamPoint>,
    k_max: usize,
) -> Result<SequenceRatio> {
    if k_max < 2 {
        return Err(Error::Domain(format!("sequence check needs K ≥ 2, got {k_max}")));
    }
    p.require_finite()?;
    let q = match (pair.needs_p1(), p1) {
        (true, Some(q)) => {
            q.require_finite()?;
            q
        }
        (true, None) => return Err(Error::Domain(format!("{pair} needs a second parameter point"))),
        (false, _) => p,
    };
    let signs: Vec<f64> = (0..k_max).map(|k| closed_form_sign(pair, p, q, k as f64)).collect();
    let recurrence_agrees = (0..k_max).all(|k| match recurrence_ratio(pair, p, q, k) {
        Some(r) if (r - 1.0).abs() > 1e-12 => (r - 1.0).signum() == signs[k],
        _ => true,
    });
    let first_break = signs.iter().position(|&s| s != signs[0]);
    let monotone = if signs.iter().all(|&s| s > 0.0) {
        Monotone::Inc
    } else if signs.iter().all(|&s| s < 0.0) {
        Monotone::Dec
    } else if signs.iter().all(|&s| s == 0.0) {
        Monotone::Constant
    } else {
        Monotone::NonMonotone
    };
    let turning_index = first_break.filter(|&m| signs[0] != 0.0 && signs[m..].iter().all(|&s| s * signs[0] <= 0.0));
    Ok(SequenceRatio {
        pair,
        monotone,
        first_break,
        turning_index,
        recurrence_agrees,
    })
}

/// The pattern the closed-form analysis predicts, or `None` outside every
/// region where a prediction is made.
pub fn expected_pattern(pair: CoeffPair, p: ParamPoint, p1: Option<ParamPoint>) -> Option<Monotone> {
    use regions as r;
    let (mu, nu) = (p.mu, p.nu);
    match pair {
        CoeffPair::StruveNu if r::struve_nu_forward(p) => Some(Monotone::Inc),
        CoeffPair::StruveNu if nu > -1.5 && mu < nu && mu + nu + 6.0 > 0.0 => Some(Monotone::Dec),
        CoeffPair::StruveMu if r::struve_mu_forward(p) => Some(Monotone::Inc),
        CoeffPair::StruveMu if mu > -1.5 && mu.abs() < nu.abs() => Some(Monotone::Dec),
        CoeffPair::Bessel if r::bessel_forward(p) => Some(Monotone::Inc),
        CoeffPair::Bessel if mu > -2.0 && (mu + 1.0).abs() < nu.abs() => Some(Monotone::Dec),
        CoeffPair::Derivative if r::positivity(p) => Some(Monotone::Inc),
        CoeffPair::Sinh if r::sinh(p) => Some(Monotone::Inc),
        CoeffPair::Sinh if r::unimodal_regime(p) => Some(Monotone::NonMonotone),
        // Negative leading coefficient of the quadratic with P(0) > 0: up, then down.
        CoeffPair::Sinh if r::positivity(p) && mu + nu + 2.0 < 0.0 && sinh_quadratic(p, 0.0) > 0.0 => {
            Some(Monotone::NonMonotone)
        }
        CoeffPair::Order => {
            let q = p1?;
            if !r::order_strict(p, q) && (r::order_forward(p, q) || r::order_reverse(p, q)) {
                // μ = μ₁ and ν² = ν₁²: the two sequences coincide.
                Some(Monotone::Constant)
            } else if r::order_forward(p, q) {
                Some(Monotone::Dec)
            } else if r::order_reverse(p, q) {
                Some(Monotone::Inc)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Hand-placed parameter points for each pair, covering both directions.
pub fn default_points(pair: CoeffPair) -> Vec<(ParamPoint, Option<ParamPoint>)> {
    let single = |v: &[(f64, f64)]| v.iter().map(|&(m, n)| (ParamPoint::new(m, n), None)).collect();
    match pair {
        CoeffPair::StruveNu => single(&[
            (2.0, 1.0),
            (0.5, -1.2),
            (-2.0, 0.5),
            (-2.5, 0.3),
            (1.0, 2.5),
            (0.0, 0.999),
        ]),
        CoeffPair::StruveMu => single(&[
            (2.0, 1.0),
            (0.0, 0.5),
            (-1.0, 1.5),
            (3.0, -2.9),
            (1.0, -1.5),
            (-0.5, 0.2),
        ]),
        CoeffPair::Bessel => single(&[
            (0.0, 0.5),
            (2.0, -2.5),
            (-1.5, 0.2),
            (0.0, 1.5),
            (1.0, -2.5),
            (-1.9, 0.95),
        ]),
        CoeffPair::Derivative => single(&[(0.0, 0.0), (-2.5, 0.2), (2.0, 1.0), (-1.0, 1.5), (5.0, -7.0)]),
        CoeffPair::Sinh => single(&[
            (0.0, 0.0),
            (1.0, -1.5),
            (-2.0, 0.9),
            (2.0, -3.8),
            (4.0, -5.5),
            (0.0, -2.1),
        ]),
        CoeffPair::Order => super::monotone::order_pairs()
            .into_iter()
            .map(|(p, q)| (p, Some(q)))
            .collect(),
    }
}

/// Checks every pair at its default points against the predicted pattern
/// and the recurrence cross-check.
pub fn sequence_report(pair: CoeffPair, k_max: usize) -> Result<SweepReport> {
    let mut rep = SweepReport::new(format!("ratio:{}", pair.id()));
    for (p, p1) in default_points(pair) {
        let res = sequence_ratio_check(pair, p, p1, k_max)?;
        let expected = expected_pattern(pair, p, p1);
        let ok = res.recurrence_agrees
            && match expected {
                Some(Monotone::NonMonotone) => res.monotone == Monotone::NonMonotone && res.turning_index.is_some(),
                Some(m) => res.monotone == m,
                None => true,
            };
        rep.record(p.mu, p.nu, f64::NAN, if ok { 0.0 } else { -1.0 }, !ok);
    }
    Ok(rep.finish())
}
