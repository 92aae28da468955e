//! Power-series coefficient sequences.
//!
//! Each family is written in the variable `(x/2)²` (or `(x/2)` for the odd
//! sinh series), so that the quotient of two series is a quotient of two
//! coefficient sequences with the same index.

use serde::{Deserialize, Serialize};

use crate::gamma::rgamma;

/// One coefficient of t̃_{μ,ν}: `beta = 1/(Γ(k+(μ−ν+3)/2) Γ(k+(μ+ν+3)/2))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesCoeff {
    pub k: usize,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CoeffFamily {
    /// β_{μ,ν,k} of t̃_{μ,ν}.
    Lommel { mu: f64, nu: f64 },
    /// α_{ν,k} = 1/(Γ(k+3/2) Γ(k+ν+3/2)) of L_ν.
    Struve { nu: f64 },
    /// γ_{μ,k} = 1/(k! Γ(k+μ+2)) of I_{μ+1}.
    Bessel { mu: f64 },
    /// δ_{μ,ν,k} = (2k+μ+1) β_{μ,ν,k} of x t̃′_{μ,ν}.
    Derivative { mu: f64, nu: f64 },
    /// ε_{μ,ν,k} = 1/((2k+1)! s^(2k+1)), s = (μ+ν+3)/2, of sinh(x/(μ+ν+3)).
    Sinh { mu: f64, nu: f64 },
}

impl CoeffFamily {
    /// The k-th coefficient evaluated directly from gamma functions.
    ///
    /// Underflows to zero once the gamma product exceeds the f64 range.
    pub fn coeff(&self, k: usize) -> f64 {
        let k = k as f64;
        match *self {
            CoeffFamily::Lommel { mu, nu } => rgamma(k + (mu - nu + 3.0) / 2.0) * rgamma(k + (mu + nu + 3.0) / 2.0),
            CoeffFamily::Struve { nu } => rgamma(k + 1.5) * rgamma(k + nu + 1.5),
            CoeffFamily::Bessel { mu } => rgamma(k + 1.0) * rgamma(k + mu + 2.0),
            CoeffFamily::Derivative { mu, nu } => {
                (2.0 * k + mu + 1.0) * CoeffFamily::Lommel { mu, nu }.coeff(k as usize)
            }
            CoeffFamily::Sinh { mu, nu } => {
                let s = (mu + nu + 3.0) / 2.0;
                rgamma(2.0 * k + 2.0) / s.powf(2.0 * k + 1.0)
            }
        }
    }

    /// `c_{k+1} / c_k` from Γ(z+1) = z Γ(z).
    pub fn step_ratio(&self, k: usize) -> f64 {
        let k = k as f64;
        match *self {
            CoeffFamily::Lommel { mu, nu } => 1.0 / ((k + (mu - nu + 3.0) / 2.0) * (k + (mu + nu + 3.0) / 2.0)),
            CoeffFamily::Struve { nu } => 1.0 / ((k + 1.5) * (k + nu + 1.5)),
            CoeffFamily::Bessel { mu } => 1.0 / ((k + 1.0) * (k + mu + 2.0)),
            CoeffFamily::Derivative { mu, nu } => {
                (2.0 * k + mu + 3.0) / (2.0 * k + mu + 1.0) * CoeffFamily::Lommel { mu, nu }.step_ratio(k as usize)
            }
            CoeffFamily::Sinh { mu, nu } => {
                let s = (mu + nu + 3.0) / 2.0;
                1.0 / ((2.0 * k + 2.0) * (2.0 * k + 3.0) * s * s)
            }
        }
    }

    /// Coefficients generated by the step ratio from the directly computed first one.
    pub fn iter(&self) -> impl Iterator<Item = SeriesCoeff> + '_ {
        let mut next = self.coeff(0);
        (0..).map(move |k| {
            let c = SeriesCoeff { k, beta: next };
            next *= self.step_ratio(k);
            c
        })
    }
}

/// β_{μ,ν,k} for k = 0, 1, 2, …
pub fn lommel_coefficients(mu: f64, nu: f64) -> impl Iterator<Item = SeriesCoeff> {
    let family = CoeffFamily::Lommel { mu, nu };
    let mut next = family.coeff(0);
    (0..).map(move |k| {
        let c = SeriesCoeff { k, beta: next };
        next *= family.step_ratio(k);
        c
    })
}
