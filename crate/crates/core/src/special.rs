//! Modified Lommel, Struve and Bessel functions of the first kind.
//!
//! The normalized Lommel function is
//!
//! ```text
//!     t̃_{μ,ν}(x) = Σ_k (x/2)^(μ+2k+1) / (Γ(k + (μ−ν+3)/2) Γ(k + (μ+ν+3)/2))
//! ```
//!
//! and t̃_{ν,ν} = L_ν. All evaluators return an [`Eval`] whose `abs_err`
//! bounds the truncation, rounding and parameter-rounding error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::est::{gamma_est, rgamma_est, Est};
use crate::params::ParamPoint;
use crate::series::{Eval, GammaSeries, Param, SeriesOptions, WeightFactor};

/// Derivative order for termwise differentiation of t̃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Order {
    Value,
    First,
    Second,
}

fn lommel_series(mu: f64, nu: f64, x: f64, order: Order, opts: &SeriesOptions) -> Result<Eval> {
    ParamPoint::new(mu, nu).require_finite()?;
    let first = [WeightFactor { base: mu, offset: 1.0 }];
    let second = [
        WeightFactor { base: mu, offset: 1.0 },
        WeightFactor { base: mu, offset: 0.0 },
    ];
    let (weights, what): (&[WeightFactor], _) = match order {
        Order::Value => (&[], "t̃"),
        Order::First => (&first, "t̃′"),
        Order::Second => (&second, "t̃″"),
    };
    let series = GammaSeries {
        what,
        power: Param::shifted(mu, 1.0),
        a: Param::half_sum(mu, -nu, 3.0),
        b: Param::half_sum(mu, nu, 3.0),
        weights,
    };
    let s = series.sum(x, opts)?;
    // The weighted sums are x·t̃′ and x²·t̃″.
    let scale = match order {
        Order::Value => return Ok(s),
        Order::First => x,
        Order::Second => x * x,
    };
    let value = s.value / scale;
    Ok(Eval {
        value,
        abs_err: s.abs_err / scale + 2.0 * f64::EPSILON * value.abs(),
        terms_used: s.terms_used,
    })
}

/// t̃_{μ,ν}(x) for `(μ, ν)` in the positivity region.
pub fn lommel_t_tilde(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    p.require_positive("t̃_{μ,ν}")?;
    lommel_series(p.mu, p.nu, x, Order::Value, opts)
}

/// t̃_{μ,ν}(x) for any real `(μ, ν)`.
///
/// Outside the positivity region leading coefficients can be negative or zero;
/// the error bound is then relative to the sum of absolute terms.
pub fn lommel_t_tilde_unchecked(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    lommel_series(p.mu, p.nu, x, Order::Value, opts)
}

/// t̃′_{μ,ν}(x) by termwise differentiation.
pub fn lommel_t_tilde_prime(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    p.require_positive("t̃′_{μ,ν}")?;
    lommel_series(p.mu, p.nu, x, Order::First, opts)
}

pub fn lommel_t_tilde_prime_unchecked(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    lommel_series(p.mu, p.nu, x, Order::First, opts)
}

/// t̃″_{μ,ν}(x) by twice termwise differentiation.
pub fn lommel_t_tilde_second(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    p.require_positive("t̃″_{μ,ν}")?;
    lommel_series(p.mu, p.nu, x, Order::Second, opts)
}

/// The constant `2^(μ−1) Γ((μ−ν+1)/2) Γ((μ+ν+1)/2)` with t = constant · t̃.
pub fn lommel_t_constant(p: ParamPoint) -> Result<Est> {
    p.require_finite()?;
    let g1 = Param::half_sum(p.mu, -p.nu, 1.0);
    let g2 = Param::half_sum(p.mu, p.nu, 1.0);
    let gamma1 = gamma_est(g1).ok_or(Error::Pole(g1.value))?;
    let gamma2 = gamma_est(g2).ok_or(Error::Pole(g2.value))?;
    let power = Est::exact(2.0).powf(p.mu - 1.0);
    Ok(power * gamma1 * gamma2)
}

/// The unnormalized modified Lommel function t_{μ,ν}(x).
pub fn lommel_t(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    let c = lommel_t_constant(p)?;
    let t = lommel_t_tilde(p, x, opts)?;
    let e = c * Est::from(t);
    Ok(Eval {
        value: e.value,
        abs_err: e.err,
        terms_used: t.terms_used,
    })
}

/// Modified Bessel function of the first kind I_ν(x), `x ≥ 0`.
pub fn bessel_i(nu: f64, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    if !nu.is_finite() || !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "I_ν needs finite ν and x ≥ 0, got ν={nu}, x={x}"
        )));
    }
    if x == 0.0 {
        opts.validate()?;
        let negative_integer = nu < 0.0 && nu == nu.floor();
        return if nu == 0.0 {
            Ok(Eval::exact(1.0))
        } else if nu > 0.0 || negative_integer {
            Ok(Eval::exact(0.0))
        } else {
            Err(Error::Domain(format!("I_ν(0) is unbounded for ν={nu}")))
        };
    }
    GammaSeries {
        what: "I_ν",
        power: Param::exact(nu),
        a: Param::exact(1.0),
        b: Param::shifted(nu, 1.0),
        weights: &[],
    }
    .sum(x, opts)
}

/// Modified Struve function of the first kind L_ν(x), `x > 0`.
pub fn struve_l(nu: f64, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    if !nu.is_finite() {
        return Err(Error::Domain(format!("L_ν needs finite ν, got {nu}")));
    }
    GammaSeries {
        what: "L_ν",
        power: Param::shifted(nu, 1.0),
        a: Param::exact(1.5),
        b: Param::shifted(nu, 1.5),
        weights: &[],
    }
    .sum(x, opts)
}

pub(crate) fn a_est(p: ParamPoint, x: f64) -> Est {
    let power = Est::rounded((x / 2.0).powf(p.mu), 1.0);
    power * rgamma_est(Param::half_sum(p.mu, -p.nu, 1.0)) * rgamma_est(Param::half_sum(p.mu, p.nu, 3.0))
}

/// a_{μ,ν}(x) = (x/2)^μ / (Γ((μ−ν+1)/2) Γ((μ+ν+3)/2)), zero where a gamma has a pole.
pub fn a_coeff(p: ParamPoint, x: f64) -> Result<f64> {
    p.require_finite()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("a_{{μ,ν}} needs finite x > 0, got {x}")));
    }
    Ok(a_est(p, x).value)
}

pub(crate) fn b_est(p: ParamPoint, x: f64, t: Est) -> Est {
    a_est(p, x) * (x / 2.0) / t
}

/// b_{μ,ν}(x) = x a_{μ,ν}(x) / (2 t̃_{μ,ν}(x)).
pub fn b_func(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Eval> {
    p.require_positive("b_{μ,ν}")?;
    let t = lommel_t_tilde(p, x, opts)?;
    let b = b_est(p, x, t.into());
    Ok(Eval {
        value: b.value,
        abs_err: b.err,
        terms_used: t.terms_used,
    })
}

/// A computed identity residual and the certified bound it must stay under.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub residual: f64,
    pub bound: f64,
    /// Magnitude of the largest term in the identity.
    pub scale: f64,
}

impl Residual {
    fn of(e: Est, terms: &[Est]) -> Self {
        Self {
            residual: e.value.abs(),
            bound: e.err,
            scale: terms.iter().fold(0.0, |m, t| m.max(t.value.abs())),
        }
    }

    pub fn holds(&self) -> bool {
        self.residual <= self.bound
    }

    /// Residual relative to the largest term; absolute when every term vanishes.
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.residual / self.scale
        } else {
            self.residual
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceResiduals {
    /// t̃_{μ−1,ν−1} − t̃_{μ+1,ν+1} − (2ν/x) t̃_{μ,ν} − a_{μ,ν}
    pub r_minus: Residual,
    /// t̃_{μ−1,ν−1} + t̃_{μ+1,ν+1} − 2 t̃′_{μ,ν} + a_{μ,ν}
    pub r_plus: Residual,
    /// (t̃/x^ν)′ − t̃_{μ+1,ν+1}/x^ν − a_{μ,ν}/x^ν
    pub r_diff: Residual,
}

impl RecurrenceResiduals {
    pub fn holds(&self) -> bool {
        self.r_minus.holds() && self.r_plus.holds() && self.r_diff.holds()
    }

    pub fn max_residual(&self) -> f64 {
        self.r_minus
            .residual
            .max(self.r_plus.residual)
            .max(self.r_diff.residual)
    }

    pub fn max_relative(&self) -> f64 {
        self.r_minus
            .relative()
            .max(self.r_plus.relative())
            .max(self.r_diff.relative())
    }
}

/// Residuals of the three-term recurrences and the differentiation formula.
///
/// Only `p` itself has to lie in the positivity region; the neighbours
/// `(μ±1, ν±1)` are summed without that restriction.
pub fn recurrence_residuals(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<RecurrenceResiduals> {
    p.require_positive("recurrence check")?;
    let t: Est = lommel_t_tilde(p, x, opts)?.into();
    let tp: Est = lommel_t_tilde_prime(p, x, opts)?.into();
    let lower: Est = lommel_t_tilde_unchecked(p.shift(-1.0), x, opts)?.into();
    let upper: Est = lommel_t_tilde_unchecked(p.shift(1.0), x, opts)?.into();
    let a = a_est(p, x);

    let t_term = t * (2.0 * p.nu / x);
    let r_minus = lower - upper - t_term - a;
    let r_plus = lower + upper - tp * 2.0 + a;

    let x_nu = Est::rounded(x.powf(-p.nu), 1.0);
    let derivative = (tp - t * (p.nu / x)) * x_nu;
    let r_diff = derivative - upper * x_nu - a * x_nu;

    Ok(RecurrenceResiduals {
        r_minus: Residual::of(r_minus, &[lower, upper, t_term, a]),
        r_plus: Residual::of(r_plus, &[lower, upper, tp * 2.0, a]),
        r_diff: Residual::of(r_diff, &[tp * x_nu, t * (p.nu / x) * x_nu, upper * x_nu, a * x_nu]),
    })
}

/// Residual of x t̃′_{μ,ν} + ν t̃_{μ,ν} = x t̃_{μ−1,ν−1}.
pub fn shift_identity_residual(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Residual> {
    p.require_positive("shift identity")?;
    let t: Est = lommel_t_tilde(p, x, opts)?.into();
    let tp: Est = lommel_t_tilde_prime(p, x, opts)?.into();
    let lower: Est = lommel_t_tilde_unchecked(p.shift(-1.0), x, opts)?.into();
    Ok(Residual::of(
        tp * x + t * p.nu - lower * x,
        &[tp * x, t * p.nu, lower * x],
    ))
}

/// Residual of t̃″ = (1 + ν²/x²) t̃ − t̃′/x + (μ+ν+1) a_{μ,ν}/x.
pub fn ode_residual(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Residual> {
    p.require_positive("ODE check")?;
    let t: Est = lommel_t_tilde(p, x, opts)?.into();
    let tp: Est = lommel_t_tilde_prime(p, x, opts)?.into();
    let tpp: Est = lommel_t_tilde_second(p, x, opts)?.into();
    let a = a_est(p, x);
    let coef = Est::rounded(1.0 + p.nu * p.nu / (x * x), 3.0);
    let forcing = a * ((p.mu + p.nu + 1.0) / x);
    let r = tpp - coef * t + tp / x - forcing;
    Ok(Residual::of(r, &[tpp, coef * t, tp / x, forcing]))
}

/// Residual of the unnormalized equation x² f″ + x f′ − (x² + ν²) f = x^(μ+1) for f = t_{μ,ν}.
pub fn lommel_ode_residual(p: ParamPoint, x: f64, opts: &SeriesOptions) -> Result<Residual> {
    p.require_positive("ODE check")?;
    let c = lommel_t_constant(p)?;
    let t = c * Est::from(lommel_t_tilde(p, x, opts)?);
    let tp = c * Est::from(lommel_t_tilde_prime(p, x, opts)?);
    let tpp = c * Est::from(lommel_t_tilde_second(p, x, opts)?);
    let rhs = Est::rounded(x.powf(p.mu + 1.0), 2.0);
    let r = tpp * (x * x) + tp * x - t * (x * x + p.nu * p.nu) - rhs;
    Ok(Residual::of(
        r,
        &[tpp * (x * x), tp * x, t * (x * x + p.nu * p.nu), rhs],
    ))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::gamma::gamma;

    fn opts() -> SeriesOptions {
        SeriesOptions::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn struve_half(x: f64) -> f64 {
        (2.0 / (PI * x)).sqrt() * (x.cosh() - 1.0)
    }

    #[test]
    fn struve_half_closed_form() {
        let t = lommel_t_tilde(ParamPoint::new(0.5, 0.5), 1.0, &opts()).unwrap();
        assert!((t.value - struve_half(1.0)).abs() <= t.abs_err);
        assert!(rel(t.value, 0.433_315_653_790_102_1) < 1e-13);
        let tight = SeriesOptions::with_tol(1e-16);
        let t = lommel_t_tilde(ParamPoint::new(0.5, 0.5), 1.0, &tight).unwrap();
        assert!(rel(t.value, struve_half(1.0)) < 1e-15);
        let l = struve_l(0.5, 2.0, &opts()).unwrap();
        let expected = (1.0 / PI).sqrt() * (2f64.cosh() - 1.0);
        assert!((l.value - expected).abs() <= l.abs_err + 4e-16 * expected);
        assert!(rel(l.value, 1.558_402_036_629_881) < 1e-12);
    }

    #[test]
    fn bessel_closed_forms() {
        assert_eq!(bessel_i(0.0, 0.0, &opts()).unwrap().value, 1.0);
        let i = bessel_i(0.5, 1.0, &opts()).unwrap();
        assert!(rel(i.value, (2.0 / PI).sqrt() * 1f64.sinh()) < 1e-14);
        assert!((i.value - 0.937_674_888_245_487_6).abs() < 1e-14);
        assert!(bessel_i(-0.5, 0.0, &opts()).is_err());
        assert_eq!(bessel_i(-2.0, 0.0, &opts()).unwrap().value, 0.0);
        // I_{-n} = I_n
        let a = bessel_i(-2.0, 3.0, &opts()).unwrap();
        let b = bessel_i(2.0, 3.0, &opts()).unwrap();
        assert!(rel(a.value, b.value) < 1e-14);
    }

    #[test]
    fn region_is_enforced() {
        let err = lommel_t_tilde(ParamPoint::new(0.0, 3.5), 1.0, &opts()).unwrap_err();
        assert!(matches!(err, Error::Region { .. }));
        assert!(err.to_string().contains("μ>−3 and |ν|<μ+3"));
        assert!(lommel_t_tilde_unchecked(ParamPoint::new(0.0, 3.5), 1.0, &opts()).is_ok());
    }

    #[test]
    fn unnormalized_constant() {
        // 2^0 Γ(1) Γ(1)
        let c = lommel_t_constant(ParamPoint::new(1.0, 0.0)).unwrap();
        assert_eq!(c.value, 1.0);
        let c = lommel_t_constant(ParamPoint::new(2.0, 0.0)).unwrap();
        assert!(rel(c.value, 2.0 * gamma(1.5).unwrap().powi(2)) < 1e-15);
        assert!(matches!(
            lommel_t_constant(ParamPoint::new(0.0, 1.0)),
            Err(Error::Pole(_))
        ));
        assert!(lommel_t(ParamPoint::new(0.0, 1.0), 1.0, &opts()).is_err());
        // t_{ν,ν} = 2^{ν−1} Γ(1/2) Γ(ν+1/2) L_ν
        let t = lommel_t(ParamPoint::new(0.5, 0.5), 1.0, &opts()).unwrap();
        let expected = 2f64.powf(-0.5) * PI.sqrt() * struve_half(1.0);
        assert!((t.value - expected).abs() <= t.abs_err + 1e-15 * expected);
    }

    #[test]
    fn a_and_b() {
        let a = a_coeff(ParamPoint::new(0.5, 0.5), 2.0).unwrap();
        assert!(rel(a, 1.0 / PI.sqrt()) < 1e-15);
        assert_eq!(a_coeff(ParamPoint::new(1.5, 2.5), 2.0).unwrap(), 0.0);
        // b → (μ−ν+1)/2 as x ↓ 0
        let b = b_func(ParamPoint::new(2.0, 1.0), 1e-6, &opts()).unwrap();
        assert!((b.value - 1.0).abs() < 1e-9);
        let b = b_func(ParamPoint::new(2.0, 2.0), 1e-6, &opts()).unwrap();
        assert!((b.value - 0.5).abs() < 1e-9);
    }

    #[test]
    fn log_derivative_limits() {
        let p = ParamPoint::new(2.0, 1.0);
        let x = 1e-6;
        let t = lommel_t_tilde(p, x, &opts()).unwrap();
        let tp = lommel_t_tilde_prime(p, x, &opts()).unwrap();
        assert!((x * tp.value / t.value - 3.0).abs() < 1e-9);
        let p = ParamPoint::new(0.5, 0.5);
        let t = lommel_t_tilde(p, 1.0, &opts()).unwrap();
        let tp = lommel_t_tilde_prime(p, 1.0, &opts()).unwrap();
        assert!(tp.value / t.value > 1.5);
    }

    #[test]
    fn identity_and_recurrences() {
        let r = shift_identity_residual(ParamPoint::new(1.5, 0.5), 3.0, &opts()).unwrap();
        let t = lommel_t_tilde(ParamPoint::new(1.5, 0.5), 3.0, &opts()).unwrap();
        assert!(r.holds());
        assert!(r.residual <= 1e-12 * 3.0 * t.value);

        let rr = recurrence_residuals(ParamPoint::new(1.0, 0.0), 1.0, &opts()).unwrap();
        assert!(rr.holds(), "{rr:?}");
        assert!(rr.max_residual() <= 1e-12);

        let rr = recurrence_residuals(ParamPoint::new(0.5, 0.5), 10.0, &opts()).unwrap();
        assert!(rr.holds(), "{rr:?}");
        assert!(rr.max_residual() * (-10f64).exp() <= 1e-10);
    }

    #[test]
    fn ode() {
        for (p, x) in [((1.5, 0.5), 2.0), ((0.5, 0.5), 0.01)] {
            let p = ParamPoint::from(p);
            let r = ode_residual(p, x, &opts()).unwrap();
            let tpp = lommel_t_tilde_second(p, x, &opts()).unwrap();
            assert!(r.holds(), "{r:?}");
            assert!(r.residual <= 1e-12 * tpp.value.abs());
        }
        let r = lommel_ode_residual(ParamPoint::new(1.0, 0.0), 1.0, &opts()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.residual < 1e-14);
    }
}
