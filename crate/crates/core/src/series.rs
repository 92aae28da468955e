//! Certified summation of gamma-type power series.
//!
//! Every function in this crate is a series of the form
//!
//! ```text
//!     Σ_k w(k) · (x/2)^(p + 2k) / (Γ(k + a) Γ(k + b))
//! ```
//!
//! where `w(k)` is a product of linear factors `(base + offset + 2k)` that
//! appear when the series is differentiated termwise. The summation stops at
//! the first index where the term ratio has dropped below 1/2 and the
//! geometric tail bound is under the requested relative tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::rgamma;

pub const DEFAULT_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_TERMS: usize = 10_000;

const EPS: f64 = f64::EPSILON;
/// Rounding allowance for the first term: one `powf`, two `rgamma`s and the products.
const FIRST_TERM_ULPS: f64 = 16.0;
/// Rounding allowance per recurrence step and per summed term.
const STEP_ULPS: f64 = 7.0;
/// Term ratio below which the geometric tail bound is used.
const TAIL_RATIO: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesOptions {
    /// Relative tolerance on the truncated tail.
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl SeriesOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::Domain(format!("tol must lie in (0, 1), got {}", self.tol)));
        }
        if self.max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(())
    }
}

/// A function value together with a certified bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eval {
    pub value: f64,
    pub abs_err: f64,
    pub terms_used: usize,
}

impl Eval {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            abs_err: 0.0,
            terms_used: 1,
        }
    }

    pub fn rel_err(&self) -> f64 {
        self.abs_err / self.value.abs()
    }

    /// True when `other` lies within the combined error bars of `self`.
    pub fn agrees_with(&self, other: &Eval) -> bool {
        (self.value - other.value).abs() <= self.abs_err + other.abs_err
    }
}

/// A quantity `value` known only up to an absolute uncertainty `err`.
///
/// Used for series parameters such as `(μ - ν + 3)/2` whose computation in
/// floating point already rounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Param {
    pub value: f64,
    pub err: f64,
}

impl Param {
    pub fn exact(value: f64) -> Self {
        Self { value, err: 0.0 }
    }

    /// `(u + v + c) / 2` with the rounding of the two additions accounted for.
    pub fn half_sum(u: f64, v: f64, c: f64) -> Self {
        let value = (u + v + c) / 2.0;
        Self {
            value,
            err: EPS * ((u + v).abs() + value.abs()),
        }
    }

    /// `u + c` rounded once.
    pub fn shifted(u: f64, c: f64) -> Self {
        let value = u + c;
        Self {
            value,
            err: 0.5 * EPS * value.abs(),
        }
    }
}

/// Linear weight factor `base + offset + 2k`, evaluated with a single rounding
/// when `offset` is an integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct WeightFactor {
    pub base: f64,
    pub offset: f64,
}

impl WeightFactor {
    fn at(&self, k: usize) -> f64 {
        self.base + (self.offset + 2.0 * k as f64)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct GammaSeries<'w> {
    pub what: &'static str,
    /// Exponent `p` of `(x/2)^(p + 2k)`.
    pub power: Param,
    pub a: Param,
    pub b: Param,
    pub weights: &'w [WeightFactor],
}

/// Distance from `y` to the nearest pole of Γ, or `y` itself when positive.
fn pole_distance(y: f64) -> f64 {
    if y > 0.0 {
        y
    } else {
        (y - y.round()).abs()
    }
}

/// Upper bound on |ψ(y)| at a single argument that is not a pole.
pub(crate) fn psi_bound(y: f64) -> f64 {
    (y.abs() + 2.0).ln() + 1.0 + 2.0 / pole_distance(y)
}

/// Upper bound on |ψ(y)| over the arguments `k + a` for `k` in `k0..=k_end`.
fn digamma_bound(a: f64, k0: usize, k_end: usize) -> f64 {
    let first = k0 as f64 + a;
    let last = k_end as f64 + a;
    let mut d = f64::INFINITY;
    let mut y = first;
    // Only arguments below ~1 can approach a pole closer than the first positive one.
    while y < 1.0 {
        d = d.min(pole_distance(y));
        y += 1.0;
    }
    d = d.min(pole_distance(y));
    (last.abs().max(first.abs()) + 2.0).ln() + 1.0 + 2.0 / d
}

fn first_regular_index(a: f64) -> usize {
    if a <= 0.0 && a == a.floor() {
        (-a) as usize + 1
    } else {
        0
    }
}

impl GammaSeries<'_> {
    fn weight(&self, k: usize) -> f64 {
        self.weights.iter().map(|w| w.at(k)).product()
    }

    fn weights_positive(&self, k: usize) -> bool {
        self.weights.iter().all(|w| w.at(k) > 0.0)
    }

    /// Sums the series at `x > 0`.
    pub fn sum(&self, x: f64, opts: &SeriesOptions) -> Result<Eval> {
        opts.validate()?;
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!("{} needs finite x > 0, got {x}", self.what)));
        }
        let a = self.a.value;
        let b = self.b.value;
        let half = x / 2.0;
        let q = half * half;

        // Terms before k0 vanish because 1/Γ has a zero there.
        let k0 = first_regular_index(a).max(first_regular_index(b));
        if k0 >= opts.max_terms {
            return Err(Error::NonConvergence {
                what: self.what,
                max_terms: opts.max_terms,
            });
        }
        let exponent = self.power.value + (2 * k0) as f64;
        let mut term = half.powf(exponent) * rgamma(k0 as f64 + a) * rgamma(k0 as f64 + b);

        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        let mut k = k0;
        loop {
            let weighted = term * self.weight(k);
            sum += weighted;
            abs_sum += weighted.abs();

            let ka = k as f64 + a;
            let kb = k as f64 + b;
            let r = q / (ka * kb);

            if ka > 0.0 && kb > 0.0 && self.weights_positive(k) {
                let growth: f64 = self.weights.iter().map(|w| w.at(k + 1) / w.at(k)).product();
                let rho = r * growth;
                if rho < TAIL_RATIO {
                    let tail = weighted.abs() * rho / (1.0 - rho);
                    if tail <= opts.tol * sum.abs() || tail <= EPS * abs_sum || weighted == 0.0 {
                        let n = (k - k0 + 1) as f64;
                        let rounding =
                            (FIRST_TERM_ULPS + 2.0 * self.weights.len() as f64 + STEP_ULPS * n) * EPS * abs_sum;
                        let sensitivity = digamma_bound(a, k0, k) * self.a.err
                            + digamma_bound(b, k0, k) * self.b.err
                            + half.ln().abs() * self.power.err;
                        return Ok(Eval {
                            value: sum,
                            abs_err: tail + rounding + sensitivity * abs_sum,
                            terms_used: k + 1,
                        });
                    }
                }
            }

            k += 1;
            if k >= opts.max_terms {
                return Err(Error::NonConvergence {
                    what: self.what,
                    max_terms: opts.max_terms,
                });
            }
            term *= r;
        }
    }
}
