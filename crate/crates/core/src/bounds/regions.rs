//! Validity regions of the cataloged inequalities.
//!
//! Each predicate is paired with the text of its requirement so that region
//! errors can name the violated condition verbatim.

use serde::Serialize;

use crate::params::ParamPoint;

/// Upper index of the direct positivity scan of the sinh quadratic.
pub const SINH_SCAN_K: usize = 1000;

pub fn positivity(p: ParamPoint) -> bool {
    p.is_finite() && p.positivity_region()
}

/// `−3/2 < ν < μ`.
pub fn struve_nu_forward(p: ParamPoint) -> bool {
    -1.5 < p.nu && p.nu < p.mu
}

/// `|ν| < μ+3` for `−3 < μ ≤ −3/2`, or `μ < ν < μ+3` for `μ > −3/2`.
pub fn struve_nu_reverse(p: ParamPoint) -> bool {
    let (mu, nu) = (p.mu, p.nu);
    (-3.0 < mu && mu <= -1.5 && nu.abs() < mu + 3.0) || (mu > -1.5 && mu < nu && nu < mu + 3.0)
}

/// `μ > −3/2`, `|μ| > |ν|`.
pub fn struve_mu_forward(p: ParamPoint) -> bool {
    p.mu > -1.5 && p.mu.abs() > p.nu.abs()
}

/// `μ > −3/2`, `|μ| < |ν| < μ+3`.
pub fn struve_mu_reverse(p: ParamPoint) -> bool {
    p.mu > -1.5 && p.mu.abs() < p.nu.abs() && p.nu.abs() < p.mu + 3.0
}

/// `μ > −2`, `|ν| < |μ+1|`.
pub fn bessel_forward(p: ParamPoint) -> bool {
    p.mu > -2.0 && p.nu.abs() < (p.mu + 1.0).abs()
}

/// `μ > −2`, `|μ+1| < |ν| < μ+3`.
pub fn bessel_reverse(p: ParamPoint) -> bool {
    p.mu > -2.0 && (p.mu + 1.0).abs() < p.nu.abs() && p.nu.abs() < p.mu + 3.0
}

/// Both points in the positivity region with `μ ≥ μ₁` and
/// `(μ−μ₁)(μ+μ₁+6) ≥ ν²−ν₁²`.
pub fn order_forward(p: ParamPoint, q: ParamPoint) -> bool {
    positivity(p) && positivity(q) && p.mu >= q.mu && (p.mu - q.mu) * (p.mu + q.mu + 6.0) >= p.nu * p.nu - q.nu * q.nu
}

/// The mirror image of [`order_forward`] with the roles of the points swapped.
pub fn order_reverse(p: ParamPoint, q: ParamPoint) -> bool {
    order_forward(q, p)
}

/// Whether the order comparison holds strictly (some defining inequality is strict).
pub fn order_strict(p: ParamPoint, q: ParamPoint) -> bool {
    // The defining inequalities are symmetric under swapping the points, so
    // strictness means μ ≠ μ₁ or (μ−μ₁)(μ+μ₁+6) ≠ ν²−ν₁².
    p.mu != q.mu || (p.mu - q.mu) * (p.mu + q.mu + 6.0) != p.nu * p.nu - q.nu * q.nu
}

/// `μ > −2`, `−1 < ν < μ+1`.
pub fn sandwich(p: ParamPoint) -> bool {
    p.mu > -2.0 && -1.0 < p.nu && p.nu < p.mu + 1.0
}

/// `μ > −1`, `|μ| > |ν|`.
pub fn neat(p: ParamPoint) -> bool {
    p.mu > -1.0 && p.mu.abs() > p.nu.abs()
}

/// `μ > −3/2`, `−1/2 ≤ ν < μ+1`.
pub fn prior_condition(p: ParamPoint) -> bool {
    p.mu > -1.5 && -0.5 <= p.nu && p.nu < p.mu + 1.0
}

/// Positivity region together with `μ+ν+1 > 0`.
pub fn succ_ratio(p: ParamPoint) -> bool {
    positivity(p) && p.mu + p.nu + 1.0 > 0.0
}

/// `μ > −1`, `0 ≤ ν < μ+1`.
pub fn turan_lower(p: ParamPoint) -> bool {
    p.mu > -1.0 && 0.0 <= p.nu && p.nu < p.mu + 1.0
}

/// `μ > −1`, `1/2 ≤ ν < μ+1`.
pub fn turan_upper(p: ParamPoint) -> bool {
    p.mu > -1.0 && 0.5 <= p.nu && p.nu < p.mu + 1.0
}

/// `μ > −1/2`, `1/2 ≤ ν < μ+1`.
pub fn ratio_upper(p: ParamPoint) -> bool {
    p.mu > -0.5 && 0.5 <= p.nu && p.nu < p.mu + 1.0
}

/// `μ > 0`, `|ν| < μ+3`.
pub fn lambda_mu(p: ParamPoint) -> bool {
    p.mu > 0.0 && p.nu.abs() < p.mu + 3.0
}

/// `μ > −1`, `|ν| < μ+3`.
pub fn lambda_nu(p: ParamPoint) -> bool {
    p.mu > -1.0 && p.nu.abs() < p.mu + 3.0
}

/// The quadratic whose positivity for all k makes the Lommel/sinh
/// coefficient quotient increasing.
pub fn sinh_quadratic(p: ParamPoint, k: f64) -> f64 {
    let (mu, nu) = (p.mu, p.nu);
    let s = mu + nu + 3.0;
    (mu + nu + 2.0) * (mu + nu + 4.0) * k * k
        + 2.5 * (s * s - 0.4 * (mu + 3.0)) * k
        + 0.25 * s * (5.0 * mu + 7.0 * nu + 15.0)
}

/// Successive difference `P(k+1) − P(k)` of [`sinh_quadratic`].
pub fn sinh_quadratic_step(p: ParamPoint, k: f64) -> f64 {
    let (mu, nu) = (p.mu, p.nu);
    let s = mu + nu + 3.0;
    2.0 * (mu + nu + 2.0) * (mu + nu + 4.0) * k + 3.5 * s * s - (mu + 4.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SinhValidity {
    /// `ν > max{−μ−2, √(2(μ+3)/5) − μ − 3, −5(μ+3)/7}`.
    pub cond1: bool,
    /// `ν > max{−μ−2, √(2(μ+4)/7) − μ − 3, −5(μ+3)/7}`.
    pub cond2: bool,
    /// `P(k) > 0` checked directly for `k = 0..=1000`.
    #[serde(rename = "P_nonneg")]
    pub p_nonneg: bool,
}

impl SinhValidity {
    pub fn either(&self) -> bool {
        self.cond1 || self.cond2
    }
}

pub fn sinh_validity(p: ParamPoint) -> SinhValidity {
    let (mu, nu) = (p.mu, p.nu);
    let common = (-mu - 2.0).max(-5.0 * (mu + 3.0) / 7.0);
    let cond = |radicand: f64| radicand >= 0.0 && nu > common.max(radicand.sqrt() - mu - 3.0);
    SinhValidity {
        cond1: cond(2.0 * (mu + 3.0) / 5.0),
        cond2: cond(2.0 * (mu + 4.0) / 7.0),
        p_nonneg: (0..=SINH_SCAN_K).all(|k| sinh_quadratic(p, k as f64) > 0.0),
    }
}

/// The sinh lower bound's region: either max-condition, inside the positivity region.
pub fn sinh(p: ParamPoint) -> bool {
    positivity(p) && sinh_validity(p).either()
}

/// `−μ−2 < ν < −5(μ+3)/7`, where the sinh quotient is not monotone.
pub fn unimodal_regime(p: ParamPoint) -> bool {
    -p.mu - 2.0 < p.nu && p.nu < -5.0 * (p.mu + 3.0) / 7.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinh_examples() {
        let p = ParamPoint::new(0.0, 0.0);
        assert_eq!(sinh_quadratic(p, 0.0), 11.25);
        let v = sinh_validity(p);
        assert!(v.cond1 && v.cond2 && v.p_nonneg);
        // Outside both conditions but P stays positive: the conditions are sufficient only.
        let q = ParamPoint::new(0.0, -2.1);
        assert!(sinh_quadratic(q, 0.0) > 0.0);
        assert!(!sinh_validity(q).either());
        // Inside the non-monotone regime P(0) < 0.
        let r = ParamPoint::new(2.0, -3.8);
        assert!(unimodal_regime(r));
        assert!(sinh_quadratic(r, 0.0) < 0.0);
        assert!(!sinh_validity(r).p_nonneg);
    }

    #[test]
    fn difference_is_consistent() {
        let p = ParamPoint::new(0.7, -1.3);
        for k in 0..20 {
            let k = k as f64;
            let d = sinh_quadratic(p, k + 1.0) - sinh_quadratic(p, k);
            assert!((d - sinh_quadratic_step(p, k)).abs() < 1e-12);
        }
    }

    #[test]
    fn conditions_imply_scan() {
        for i in 0..60 {
            for j in 0..60 {
                let p = ParamPoint::new(-2.9 + 0.1 * i as f64, -5.9 + 0.2 * j as f64);
                if positivity(p) && sinh_validity(p).either() {
                    assert!(sinh_validity(p).p_nonneg, "{p}");
                }
            }
        }
    }

    #[test]
    fn order_regions() {
        let p = ParamPoint::new(2.0, 1.0);
        let q = ParamPoint::new(1.0, 0.5);
        assert!(order_forward(p, q));
        assert!(order_reverse(q, p));
        assert!(order_strict(p, q));
        assert!(!order_strict(p, p));
        let a = ParamPoint::new(0.0, 1.0);
        let b = ParamPoint::new(0.0, 0.0);
        assert!(order_strict(a, b) && order_strict(b, a));
        assert!(!order_strict(ParamPoint::new(1.0, 0.5), ParamPoint::new(1.0, -0.5)));
    }
}
