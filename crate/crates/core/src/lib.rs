//! Modified Lommel functions of the first kind and a numerical checker for
//! their monotonicity properties and functional inequalities.
//!
//! The crate is organized bottom-up:
//!
//! * [`gamma`], [`series`], [`special`]: Γ, 1/Γ and certified power-series
//!   evaluation of t̃_{μ,ν}, L_ν, I_ν and their derivatives.
//! * [`coeffs`]: the coefficient sequences whose ratios drive the
//!   monotonicity arguments.
//! * [`asymptotics`]: small- and large-x limiting forms.
//! * [`bounds`]: the catalog of inequalities and a pointwise checker.
//! * [`verify`]: grid sweeps, sequence-ratio checks and report output.

pub mod asymptotics;
pub mod bounds;
pub mod coeffs;
pub mod error;
pub mod est;
pub mod gamma;
pub mod params;
pub mod series;
pub mod special;
pub mod verify;

pub use bounds::{catalog, check, lookup, Bound, BoundArgs, CheckResult, Side, Target};
pub use coeffs::CoeffFamily;
pub use error::{Error, Result};
pub use est::Est;
pub use gamma::{gamma, rgamma};
pub use params::ParamPoint;
pub use series::{Eval, SeriesOptions, DEFAULT_MAX_TERMS, DEFAULT_TOL};
pub use special::{
    a_coeff, b_func, bessel_i, lommel_t, lommel_t_tilde, lommel_t_tilde_prime, lommel_t_tilde_unchecked, ode_residual,
    recurrence_residuals, shift_identity_residual, struve_l, RecurrenceResiduals, Residual,
};
pub use verify::{GridSpec, Suite, SweepReport};
