//! First-order error propagation for derived quantities.
//!
//! An [`Est`] carries a value and an absolute error bound. Every operation
//! widens the bound by the propagated input error plus one rounding.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::gamma::{gamma, rgamma};
use crate::series::{psi_bound, Eval, Param};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Est {
    pub value: f64,
    pub err: f64,
}

impl Est {
    pub fn new(value: f64, err: f64) -> Self {
        Self { value, err }
    }

    pub fn exact(value: f64) -> Self {
        Self { value, err: 0.0 }
    }

    /// A value computed with a handful of correctly rounded operations.
    pub fn rounded(value: f64, ulps: f64) -> Self {
        Self {
            value,
            err: ulps * EPS * value.abs(),
        }
    }

    pub fn abs(self) -> Self {
        Self {
            value: self.value.abs(),
            err: self.err,
        }
    }

    pub fn sqrt(self) -> Self {
        let value = self.value.sqrt();
        let hi = (self.value + self.err).sqrt();
        let lo = (self.value - self.err).max(0.0).sqrt();
        Self {
            value,
            err: (hi - value).max(value - lo) + EPS * value,
        }
    }

    /// Applies a monotone function, bounding the error by its values at the
    /// ends of the uncertainty interval.
    pub fn map_monotone(self, f: impl Fn(f64) -> f64, ulps: f64) -> Self {
        let value = f(self.value);
        let spread = if self.err == 0.0 {
            0.0
        } else {
            let hi = f(self.value + self.err);
            let lo = f(self.value - self.err);
            (hi - value).abs().max((value - lo).abs())
        };
        Self {
            value,
            err: spread + ulps * EPS * value.abs(),
        }
    }

    pub fn powf(self, exponent: f64) -> Self {
        if self.value - self.err <= 0.0 && exponent < 0.0 {
            return Self::new(self.value.powf(exponent), f64::INFINITY);
        }
        self.map_monotone(|v| v.max(0.0).powf(exponent), 2.0)
    }

    pub fn sinh(self) -> Self {
        self.map_monotone(f64::sinh, 2.0)
    }

    /// Lower and upper ends of the uncertainty interval.
    pub fn lo(&self) -> f64 {
        self.value - self.err
    }

    pub fn hi(&self) -> f64 {
        self.value + self.err
    }
}

impl From<Eval> for Est {
    fn from(e: Eval) -> Self {
        Self {
            value: e.value,
            err: e.abs_err,
        }
    }
}

impl From<f64> for Est {
    fn from(v: f64) -> Self {
        Self::exact(v)
    }
}

impl Add for Est {
    type Output = Est;
    fn add(self, rhs: Est) -> Est {
        let value = self.value + rhs.value;
        Est::new(value, self.err + rhs.err + 0.5 * EPS * value.abs())
    }
}

impl Sub for Est {
    type Output = Est;
    fn sub(self, rhs: Est) -> Est {
        let value = self.value - rhs.value;
        Est::new(value, self.err + rhs.err + 0.5 * EPS * value.abs())
    }
}

impl Mul for Est {
    type Output = Est;
    fn mul(self, rhs: Est) -> Est {
        let value = self.value * rhs.value;
        Est::new(
            value,
            self.value.abs() * rhs.err + rhs.value.abs() * self.err + self.err * rhs.err + 0.5 * EPS * value.abs(),
        )
    }
}

impl Div for Est {
    type Output = Est;
    fn div(self, rhs: Est) -> Est {
        let value = self.value / rhs.value;
        let margin = rhs.value.abs() - rhs.err;
        let err = if margin > 0.0 {
            (self.err + value.abs() * rhs.err) / margin + 0.5 * EPS * value.abs()
        } else {
            f64::INFINITY
        };
        Est::new(value, err)
    }
}

impl Neg for Est {
    type Output = Est;
    fn neg(self) -> Est {
        Est::new(-self.value, self.err)
    }
}

impl Mul<f64> for Est {
    type Output = Est;
    fn mul(self, rhs: f64) -> Est {
        self * Est::exact(rhs)
    }
}

impl Add<f64> for Est {
    type Output = Est;
    fn add(self, rhs: f64) -> Est {
        self + Est::exact(rhs)
    }
}

impl Sub<f64> for Est {
    type Output = Est;
    fn sub(self, rhs: f64) -> Est {
        self - Est::exact(rhs)
    }
}

impl Div<f64> for Est {
    type Output = Est;
    fn div(self, rhs: f64) -> Est {
        self / Est::exact(rhs)
    }
}

/// Maximum relative error of `gamma`/`rgamma` away from the parameter sensitivity.
const GAMMA_ULPS: f64 = 8.0;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// 1/Γ at an argument that carries its own rounding error.
pub(crate) fn rgamma_est(z: Param) -> Est {
    let value = rgamma(z.value);
    let sensitivity = if value == 0.0 {
        // |d/dz 1/Γ(z)| = n! at z = -n.
        factorial((-z.value) as u32)
    } else {
        value.abs() * psi_bound(z.value)
    };
    Est::new(value, GAMMA_ULPS * EPS * value.abs() + sensitivity * z.err)
}

/// Γ at an argument that carries its own rounding error; `None` at a pole.
pub(crate) fn gamma_est(z: Param) -> Option<Est> {
    let value = gamma(z.value).ok()?;
    Some(Est::new(
        value,
        GAMMA_ULPS * EPS * value.abs() + value.abs() * psi_bound(z.value) * z.err,
    ))
}
