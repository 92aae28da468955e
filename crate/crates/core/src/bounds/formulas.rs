//! Evaluators for the bound expressions and their targets, carried out in
//! error-propagating arithmetic so every margin comes with a budget.

use std::f64::consts::PI;

use crate::error::Result;
use crate::est::{gamma_est, rgamma_est, Est};
use crate::gamma::gamma;
use crate::params::ParamPoint;
use crate::series::{Param, SeriesOptions};
use crate::special::{b_est, bessel_i, lommel_t_tilde_prime_unchecked, lommel_t_tilde_unchecked, struve_l};

use super::BoundArgs;

const EPS: f64 = f64::EPSILON;

/// `u + v + c` rounded twice.
fn lin(u: f64, v: f64, c: f64) -> Param {
    let value = u + v + c;
    Param {
        value,
        err: EPS * ((u + v).abs() + value.abs()),
    }
}

fn gam(z: Param) -> Result<Est> {
    gamma(z.value)?;
    Ok(gamma_est(z).expect("gamma succeeded above"))
}

/// `base^e` including the sensitivity to the rounding of `e`.
fn powp(base: Est, e: Param) -> Est {
    let p = base.powf(e.value);
    let log_term = if base.value > 0.0 {
        (p.value * base.value.ln()).abs() * e.err
    } else {
        0.0
    };
    Est::new(p.value, p.err + log_term)
}

fn sqrt_pi() -> Est {
    Est::rounded(PI.sqrt(), 1.0)
}

/// 1/(Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)), the leading coefficient β_{μ,ν,0}.
pub(crate) fn rg_beta0(p: ParamPoint) -> Est {
    rgamma_est(Param::half_sum(p.mu, -p.nu, 3.0)) * rgamma_est(Param::half_sum(p.mu, p.nu, 3.0))
}

/// Γ((μ−ν+3)/2) Γ((μ+ν+3)/2).
fn g_beta0(p: ParamPoint) -> Result<Est> {
    Ok(gam(Param::half_sum(p.mu, -p.nu, 3.0))? * gam(Param::half_sum(p.mu, p.nu, 3.0))?)
}

pub(crate) fn t(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<Est> {
    Ok(lommel_t_tilde_unchecked(p, x, o)?.into())
}

fn b(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<Est> {
    Ok(b_est(p, x, t(p, x, o)?))
}

fn x_est(x: f64) -> Est {
    Est::exact(x)
}

// ---- targets -------------------------------------------------------------

pub(crate) fn target_t(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    t(a.p, a.x, o)
}

pub(crate) fn target_ratio_succ(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(t(a.p, a.x, o)? / t(a.p.shift(-1.0), a.x, o)?)
}

pub(crate) fn target_ratio_two_x(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(t(a.p, a.x, o)? / t(a.p, a.y.expect("validated"), o)?)
}

/// x t̃′/t̃.
pub(crate) fn target_log_deriv(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    log_deriv(a.p, a.x, o)
}

pub(crate) fn log_deriv(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<Est> {
    let d: Est = lommel_t_tilde_prime_unchecked(p, x, o)?.into();
    Ok(d * x / t(p, x, o)?)
}

pub(crate) fn turan_delta(p: ParamPoint, x: f64, o: &SeriesOptions) -> Result<Est> {
    let c = t(p, x, o)?;
    Ok(c * c - t(p.shift(-1.0), x, o)? * t(p.shift(1.0), x, o)?)
}

pub(crate) fn target_turan_delta(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    turan_delta(a.p, a.x, o)
}

pub(crate) fn target_turan_lambda_mu(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let p = a.p;
    let c = t(p, a.x, o)?;
    let lo = t(ParamPoint::new(p.mu - 1.0, p.nu), a.x, o)?;
    let hi = t(ParamPoint::new(p.mu + 1.0, p.nu), a.x, o)?;
    Ok(c * c - lo * hi)
}

pub(crate) fn target_turan_lambda_nu(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let p = a.p;
    let c = t(p, a.x, o)?;
    let lo = t(ParamPoint::new(p.mu, p.nu - 1.0), a.x, o)?;
    let hi = t(ParamPoint::new(p.mu, p.nu + 1.0), a.x, o)?;
    Ok(c * c - lo * hi)
}

/// 2 b_{μ+1,ν+1}(x).
pub(crate) fn target_b_shifted(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(b(a.p.shift(1.0), a.x, o)? * 2.0)
}

// ---- constants -----------------------------------------------------------

/// The constant of the two-sided Bessel sandwich,
/// `((μ+3)²−ν²)^((μ−ν+1)/2) Γ(ν+1) / (2^(μ−ν+1) Γ((μ−ν+3)/2) Γ((μ+ν+3)/2))`.
pub(crate) fn c_const(p: ParamPoint) -> Result<Est> {
    let (mu, nu) = (p.mu, p.nu);
    let d = Est::rounded((mu + 3.0) * (mu + 3.0) - nu * nu, 3.0);
    let e = Param::half_sum(mu, -nu, 1.0);
    let two_pow = powp(Est::exact(2.0), lin(mu, -nu, 1.0));
    Ok(powp(d, e) * gam(Param::shifted(nu, 1.0))? * rg_beta0(p) / two_pow)
}

/// The constant of the λ-normalized Turán bounds,
/// `1 − [Γ((μ−ν+3)/2)Γ((μ+ν+3)/2)]² / (Γ((μ−ν+2)/2)Γ((μ+ν+2)/2)Γ((μ−ν+4)/2)Γ((μ+ν+4)/2))`.
pub(crate) fn a_const(p: ParamPoint) -> Result<Est> {
    let (mu, nu) = (p.mu, p.nu);
    let g = g_beta0(p)?;
    let den = gam(Param::half_sum(mu, -nu, 2.0))?
        * gam(Param::half_sum(mu, nu, 2.0))?
        * gam(Param::half_sum(mu, -nu, 4.0))?
        * gam(Param::half_sum(mu, nu, 4.0))?;
    Ok(Est::exact(1.0) - g * g / den)
}

// ---- bound sides ---------------------------------------------------------

/// Struve-ν comparison: √π 2^(ν−μ−1) Γ(ν+3/2) β₀ x^(μ−ν) L_ν(x).
pub(crate) fn struve_nu(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let l: Est = struve_l(p.nu, x, o)?.into();
    Ok(sqrt_pi()
        * powp(Est::exact(2.0), lin(p.nu, -p.mu, -1.0))
        * gam(Param::shifted(p.nu, 1.5))?
        * rg_beta0(p)
        * powp(x_est(x), Param::shifted(p.mu, -p.nu))
        * l)
}

/// Struve-μ comparison: √π Γ(μ+3/2) β₀ L_μ(x) / 2.
pub(crate) fn struve_mu(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let l: Est = struve_l(p.mu, x, o)?.into();
    Ok(sqrt_pi() * gam(Param::shifted(p.mu, 1.5))? * rg_beta0(p) * l / 2.0)
}

/// Bessel comparison: Γ(μ+2) β₀ I_{μ+1}(x).
pub(crate) fn bessel(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let i: Est = bessel_i(p.mu + 1.0, x, o)?.into();
    Ok(gam(Param::shifted(p.mu, 2.0))? * rg_beta0(p) * i)
}

/// Order comparison: t̃_{μ₁,ν₁}(x) scaled so its small-x limit matches t̃_{μ,ν}.
pub(crate) fn order(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, q, x) = (a.p, a.p1.expect("validated"), a.x);
    let scale = powp(Est::exact(2.0), Param::shifted(q.mu, -p.mu)) * powp(x_est(x), Param::shifted(p.mu, -q.mu));
    Ok(scale * g_beta0(q)? * rg_beta0(p) * t(q, x, o)?)
}

/// μ + 1.
pub(crate) fn log_deriv_floor(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    Ok(Est::rounded(a.p.mu + 1.0, 0.5))
}

/// √(x² + ν² + 2(μ+ν+1) b_{μ,ν}(x)).
pub(crate) fn condition_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let s = Est::rounded(x * x + p.nu * p.nu, 2.0);
    Ok(
        (s + b(p, x, o)? * (2.0 * (p.mu + p.nu + 1.0)) + Est::new(0.0, 2.0 * EPS * (p.mu.abs() + p.nu.abs() + 1.0)))
            .sqrt(),
    )
}

pub(crate) fn condition_lower(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(-condition_upper(a, o)?)
}

/// (x²/((μ+3)²−ν²+x²))^((μ−ν+1)/2) I_ν(x).
pub(crate) fn sandwich_lower(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let d = Est::rounded((p.mu + 3.0) * (p.mu + 3.0) - p.nu * p.nu, 3.0);
    let x2 = Est::rounded(x * x, 0.5);
    let factor = powp(x2 / (d + x2), Param::half_sum(p.mu, -p.nu, 1.0));
    let i: Est = bessel_i(p.nu, x, o)?.into();
    Ok(factor * i)
}

pub(crate) fn sandwich_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(c_const(a.p)? * sandwich_lower(a, o)?)
}

/// Γ(μ+1)√(3(2μ+3)) β₀ x I_μ(x) / (2√(x²+3(2μ+3))).
pub(crate) fn neat_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let c = Est::rounded(3.0 * (2.0 * p.mu + 3.0), 2.0);
    let i: Est = bessel_i(p.mu, x, o)?.into();
    let den = (Est::rounded(x * x, 0.5) + c).sqrt() * 2.0;
    Ok(gam(Param::shifted(p.mu, 1.0))? * c.sqrt() * rg_beta0(p) * i * x / den)
}

/// √((ν+1/2)² + x²) + 2b_{μ,ν}(x) − 1/2.
pub(crate) fn prior_condition_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let h = p.nu + 0.5;
    let r = Est::rounded(h * h + x * x, 3.0).sqrt();
    Ok(r + b(p, x, o)? * 2.0 - 0.5)
}

pub(crate) fn prior_condition_lower(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    Ok(-prior_condition_upper(a, o)?)
}

/// (x/y)^(μ+1).
pub(crate) fn two_x_upper(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    let r = Est::rounded(a.x / a.y.expect("validated"), 0.5);
    Ok(powp(r, Param::shifted(a.p.mu, 1.0)))
}

/// x/(μ+ν+1).
pub(crate) fn succ_upper(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    Ok(x_est(a.x) / Est::from(lin(a.p.mu, a.p.nu, 1.0)))
}

/// (μ+ν+3) x^μ sinh(x/(μ+ν+3)) β₀ / 2^(μ+1).
pub(crate) fn sinh_lower(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let s: Est = lin(p.mu, p.nu, 3.0).into();
    let sh = (x_est(x) / s).sinh();
    Ok(s * powp(x_est(x), Param::exact(p.mu)) * sh * rg_beta0(p) / powp(Est::exact(2.0), Param::shifted(p.mu, 1.0)))
}

/// 2 (x/2)^(2μ+2) β₀² / (μ+ν+3).
pub(crate) fn turan_leading(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let r = rg_beta0(p);
    let s: Est = lin(p.mu, p.nu, 3.0).into();
    let pw = powp(Est::exact(x / 2.0), lin(p.mu, p.mu, 2.0));
    Ok(pw * r * r * 2.0 / s)
}

/// 2 t̃² / (μ+ν+3).
pub(crate) fn turan_square(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let c = t(a.p, a.x, o)?;
    let s: Est = lin(a.p.mu, a.p.nu, 3.0).into();
    Ok(c * c * 2.0 / s)
}

/// (1 − 2b_{μ,ν}(x)) t̃² / (ν+1/2+√((ν+1/2)²+x²)).
///
/// This is what the ratio bound [`ratio_lower`] combined with [`ratio_upper`]
/// at (μ+1, ν+1) implies for Δ; the variant with 2b in place of 1 − 2b fails
/// already as x ↓ 0 whenever (μ−ν+1)(μ+ν+3) > 2(2ν+1).
pub(crate) fn turan_sqrt_lower(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let c = t(p, x, o)?;
    let h = p.nu + 0.5;
    let den = Est::rounded(h * h + x * x, 3.0).sqrt() + h;
    Ok((Est::exact(1.0) - b_est(p, x, c) * 2.0) * c * c / den)
}

/// (μ−ν+4) t̃² / (μ+3/2+√((ν+3/2)²+x²)).
pub(crate) fn turan_sqrt_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let c = t(p, x, o)?;
    let h = p.nu + 1.5;
    let den = Est::rounded(h * h + x * x, 3.0).sqrt() + Est::rounded(p.mu + 1.5, 0.5);
    Ok(c * c * Est::from(lin(p.mu, -p.nu, 4.0)) / den)
}

/// x / (ν−1/2+2b_{μ,ν}(x)+√((ν+1/2)²+x²)).
pub(crate) fn ratio_lower(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let h = p.nu + 0.5;
    let den = Est::rounded(h * h + x * x, 3.0).sqrt() + b(p, x, o)? * 2.0 + Est::rounded(p.nu - 0.5, 0.5);
    Ok(x_est(x) / den)
}

/// x / (ν−1/2+√((ν−1/2)²+x²)).
pub(crate) fn ratio_upper(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    let (p, x) = (a.p, a.x);
    let h = p.nu - 0.5;
    let den = Est::rounded(h * h + x * x, 3.0).sqrt() + Est::rounded(h, 0.5);
    Ok(x_est(x) / den)
}

/// μ − ν + 1.
pub(crate) fn b_ceiling(a: &BoundArgs, _: &SeriesOptions) -> Result<Est> {
    Ok(lin(a.p.mu, -a.p.nu, 1.0).into())
}

/// A_{μ,ν} t̃².
pub(crate) fn lambda_upper(a: &BoundArgs, o: &SeriesOptions) -> Result<Est> {
    let c = t(a.p, a.x, o)?;
    Ok(a_const(a.p)? * c * c)
}

impl From<Param> for Est {
    fn from(p: Param) -> Self {
        Est::new(p.value, p.err)
    }
}
