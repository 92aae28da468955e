use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order parameters `(μ, ν)` of a modified Lommel function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub mu: f64,
    pub nu: f64,
}

pub const POSITIVITY_REQUIREMENT: &str = "μ>−3 and |ν|<μ+3";

impl ParamPoint {
    pub const fn new(mu: f64, nu: f64) -> Self {
        Self { mu, nu }
    }

    /// `μ > −3` and `|ν| < μ + 3`: every coefficient of t̃_{μ,ν} is positive.
    pub fn positivity_region(&self) -> bool {
        self.mu > -3.0 && self.nu.abs() < self.mu + 3.0
    }

    /// The closed version `μ ≥ −3`, `|ν| ≤ μ + 3`, on which t̃_{μ,ν} stays
    /// positive for `x > 0` although individual coefficients may vanish.
    pub fn closed_positivity_region(&self) -> bool {
        self.mu >= -3.0 && self.nu.abs() <= self.mu + 3.0
    }

    pub fn is_finite(&self) -> bool {
        self.mu.is_finite() && self.nu.is_finite()
    }

    /// The point `(μ + d, ν + d)`.
    pub fn shift(&self, d: f64) -> Self {
        Self::new(self.mu + d, self.nu + d)
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "non-finite parameters ({}, {})",
                self.mu, self.nu
            )))
        }
    }

    pub(crate) fn require_positive(&self, what: &'static str) -> Result<()> {
        self.require_finite()?;
        if self.positivity_region() {
            Ok(())
        } else {
            Err(self.region_error(what, POSITIVITY_REQUIREMENT))
        }
    }

    pub(crate) fn region_error(&self, what: &'static str, requirement: &'static str) -> Error {
        Error::Region {
            what,
            requirement,
            mu: self.mu,
            nu: self.nu,
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(μ={}, ν={})", self.mu, self.nu)
    }
}

impl From<(f64, f64)> for ParamPoint {
    fn from((mu, nu): (f64, f64)) -> Self {
        Self::new(mu, nu)
    }
}
