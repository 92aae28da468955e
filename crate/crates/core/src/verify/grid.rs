use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::ParamPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Log,
    Lin,
}

/// Deterministic sampling plan over x and the order parameters.
///
/// Empty `param_points`/`pairs` mean "use the claim's default pool", which
/// is drawn reproducibly from `seed`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_points: Vec<f64>,
    pub param_points: Vec<ParamPoint>,
    /// `(p, p₁)` pairs for two-point claims.
    pub pairs: Vec<(ParamPoint, ParamPoint)>,
    pub seed: u64,
}

impl Default for GridSpec {
    /// 60 log-spaced points in [1e−4, 40], seed 0.
    fn default() -> Self {
        Self::from_points(log_space(1e-4, 40.0, 60))
    }
}

pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => (a + (b - a) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

pub fn lin_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

impl GridSpec {
    pub fn from_points(x_points: Vec<f64>) -> Self {
        Self {
            x_points,
            param_points: Vec::new(),
            pairs: Vec::new(),
            seed: 0,
        }
    }

    pub fn new(lo: f64, hi: f64, n: usize, spacing: Spacing) -> Result<Self> {
        if !(lo > 0.0 && hi > lo && hi.is_finite()) || n < 2 {
            return Err(Error::Domain(format!(
                "grid needs 0 < lo < hi and n ≥ 2, got lo={lo}, hi={hi}, n={n}"
            )));
        }
        let pts = match spacing {
            Spacing::Log => log_space(lo, hi, n),
            Spacing::Lin => lin_space(lo, hi, n),
        };
        let g = Self::from_points(pts);
        g.validate()?;
        Ok(g)
    }

    /// The x grid used for inequality sweeps: 40 log-spaced points in [1e−3, 40].
    pub fn inequality_default() -> Self {
        Self::from_points(log_space(1e-3, 40.0, 40))
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_params(mut self, params: Vec<ParamPoint>) -> Self {
        self.param_points = params;
        self
    }

    pub fn with_pairs(mut self, pairs: Vec<(ParamPoint, ParamPoint)>) -> Self {
        self.pairs = pairs;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_points.is_empty() {
            return Err(Error::Domain("grid has no x points".into()));
        }
        if self.x_points.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::Domain("grid x points must be finite and positive".into()));
        }
        if self.x_points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain("grid x points must be strictly increasing".into()));
        }
        Ok(())
    }
}

/// Parses `"lo:hi:n:log"` or `"lo:hi:n:lin"` (spacing defaults to log).
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("grid must look like lo:hi:n:log|lin, got `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        let spacing = match parts.get(3).map(|s| s.trim()) {
            None | Some("log") => Spacing::Log,
            Some("lin") => Spacing::Lin,
            Some(_) => return Err(bad()),
        };
        GridSpec::new(lo, hi, n, spacing)
    }
}
