//! Leading-order limiting forms as x ↓ 0 and x → ∞.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{gamma, rgamma};
use crate::params::ParamPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKind {
    SmallX,
    LargeX,
}

/// A named limiting form and the side of the axis it describes.
#[derive(Debug, Clone, Copy)]
pub struct LimitForm {
    pub name: &'static str,
    pub kind: LimitKind,
    pub evaluate: fn(ParamPoint, f64) -> Result<f64>,
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("limiting forms need finite x > 0, got {x}")))
    }
}

fn is_nonpositive_integer(z: f64) -> bool {
    z <= 0.0 && z == z.floor()
}

/// (x/2)^(μ+1) / (Γ((μ−ν+3)/2) Γ((μ+ν+3)/2)), the x ↓ 0 form of t̃_{μ,ν}.
pub fn t_small(p: ParamPoint, x: f64) -> Result<f64> {
    check_x(x)?;
    p.require_positive("small-x form of t̃")?;
    Ok((x / 2.0).powf(p.mu + 1.0) * rgamma((p.mu - p.nu + 3.0) / 2.0) * rgamma((p.mu + p.nu + 3.0) / 2.0))
}

/// e^x/√(2πx) · (1 − (4ν²−1)/(8x)), the x → ∞ form of t̃_{μ,ν} for any μ, ν.
pub fn t_large(p: ParamPoint, x: f64) -> Result<f64> {
    check_x(x)?;
    p.require_finite()?;
    Ok(il_large(x)? * (1.0 - (4.0 * p.nu * p.nu - 1.0) / (8.0 * x)))
}

/// x^ν / (2^ν Γ(ν+1)), the x ↓ 0 form of I_ν.
pub fn i_small(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if is_nonpositive_integer(nu + 1.0) {
        return Err(Error::Domain(format!(
            "small-x form of I_ν needs ν ∉ {{−1,−2,…}}, got {nu}"
        )));
    }
    Ok((x / 2.0).powf(nu) / gamma(nu + 1.0)?)
}

/// x^(ν+1) / (√π 2^ν Γ(ν+3/2)), the x ↓ 0 form of L_ν.
pub fn l_small(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if is_nonpositive_integer(nu + 1.5) {
        return Err(Error::Domain(format!(
            "small-x form of L_ν needs ν ∉ {{−3/2,−5/2,…}}, got {nu}"
        )));
    }
    Ok(x.powf(nu + 1.0) / (PI.sqrt() * 2f64.powf(nu) * gamma(nu + 1.5)?))
}

/// e^x/√(2πx), the common x → ∞ form of I_ν and L_ν.
pub fn il_large(x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(x.exp() / (2.0 * PI * x).sqrt())
}

fn t_small_form(p: ParamPoint, x: f64) -> Result<f64> {
    t_small(p, x)
}

fn t_large_form(p: ParamPoint, x: f64) -> Result<f64> {
    t_large(p, x)
}

/// The limiting forms of t̃_{μ,ν}.
pub fn lommel_forms() -> [LimitForm; 2] {
    [
        LimitForm {
            name: "t_small",
            kind: LimitKind::SmallX,
            evaluate: t_small_form,
        },
        LimitForm {
            name: "t_large",
            kind: LimitKind::LargeX,
            evaluate: t_large_form,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesOptions;
    use crate::special::{bessel_i, lommel_t_tilde, struve_l};

    #[test]
    fn small_x_ratio_for_lommel() {
        let p = ParamPoint::new(1.0, 0.0);
        let x = 1e-5;
        let t = lommel_t_tilde(p, x, &SeriesOptions::default()).unwrap();
        assert!((t.value / t_small(p, x).unwrap() - 1.0).abs() < 1e-4);
    }

    #[test]
    fn large_x_ratio_for_lommel() {
        let p = ParamPoint::new(1.0, 0.0);
        let x = 200.0;
        let t = lommel_t_tilde(p, x, &SeriesOptions::default()).unwrap();
        assert!((t.value / t_large(p, x).unwrap() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn half_order_forms_coincide() {
        for x in [0.5, 3.0, 40.0] {
            let t = t_large(ParamPoint::new(0.5, 0.5), x).unwrap();
            assert_eq!(il_large(x).unwrap() / t, 1.0);
            let t = t_large(ParamPoint::new(0.0, -0.5), x).unwrap();
            assert_eq!(il_large(x).unwrap() / t, 1.0);
        }
    }

    #[test]
    fn bessel_and_struve_small_forms() {
        let o = SeriesOptions::default();
        let i = bessel_i(1.5, 1e-4, &o).unwrap().value;
        assert!((i / i_small(1.5, 1e-4).unwrap() - 1.0).abs() < 1e-8);
        let l = struve_l(0.3, 1e-4, &o).unwrap().value;
        assert!((l / l_small(0.3, 1e-4).unwrap() - 1.0).abs() < 1e-8);
        assert!(i_small(-2.0, 1.0).is_err());
        assert!(l_small(-2.5, 1.0).is_err());
        assert!(t_small(ParamPoint::new(0.0, 3.0), 1.0).is_err());
    }
}
