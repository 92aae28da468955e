//! Soundness sweeps of cataloged inequalities over (parameter, x) grids.

use rayon::prelude::*;

use crate::bounds::{catalog, check_bound, lookup, Bound, BoundArgs, CheckResult};
use crate::error::Result;
use crate::params::ParamPoint;
use crate::series::SeriesOptions;

use super::grid::GridSpec;
use super::report::SweepReport;
use super::sampling::{Sampler, PARAM_HI, PARAM_LO};

/// Default pool size per bound: near-boundary points, then interior points.
pub const POOL_BOUNDARY: usize = 10;
pub const POOL_INTERIOR: usize = 15;

/// Second argument used for two-argument bounds: y = Y_FACTOR · x.
pub const Y_FACTOR: f64 = 2.0;

fn args_for(b: &Bound, p: ParamPoint, p1: Option<ParamPoint>, x: f64) -> BoundArgs {
    let mut a = BoundArgs::new(p, x);
    if let Some(q) = p1 {
        a = a.with_p1(q);
    }
    if b.needs_y {
        a = a.with_y(Y_FACTOR * x);
    }
    a
}

fn salt(id: &str) -> u64 {
    // FNV-1a: a fixed, platform-independent per-bound seed offset.
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, c| {
        (h ^ c as u64).wrapping_mul(0x100_0000_01b3)
    })
}

/// Default parameter pool for `b`: points (or point pairs) where at least one
/// side of the bound applies.
pub fn default_pool(b: &Bound, seed: u64) -> Vec<(ParamPoint, Option<ParamPoint>)> {
    let seed = seed ^ salt(b.id);
    if b.needs_p1 {
        let lo = [PARAM_LO[0], PARAM_LO[1], PARAM_LO[0], PARAM_LO[1]];
        let hi = [PARAM_HI[0], PARAM_HI[1], PARAM_HI[0], PARAM_HI[1]];
        let valid = |v: &[f64]| {
            b.valid(&args_for(
                b,
                ParamPoint::new(v[0], v[1]),
                Some(ParamPoint::new(v[2], v[3])),
                1.0,
            ))
        };
        Sampler::new(seed, &lo, &hi, &valid)
            .pool(POOL_BOUNDARY, POOL_INTERIOR)
            .into_iter()
            .map(|v| (ParamPoint::new(v[0], v[1]), Some(ParamPoint::new(v[2], v[3]))))
            .collect()
    } else {
        let valid = |v: &[f64]| b.valid(&args_for(b, ParamPoint::new(v[0], v[1]), None, 1.0));
        Sampler::new(seed, &PARAM_LO, &PARAM_HI, &valid)
            .pool(POOL_BOUNDARY, POOL_INTERIOR)
            .into_iter()
            .map(|v| (ParamPoint::new(v[0], v[1]), None))
            .collect()
    }
}

fn params_for(b: &Bound, grid: &GridSpec) -> Vec<(ParamPoint, Option<ParamPoint>)> {
    if b.needs_p1 {
        if grid.pairs.is_empty() {
            default_pool(b, grid.seed)
        } else {
            grid.pairs.iter().map(|&(p, q)| (p, Some(q))).collect()
        }
    } else if grid.param_points.is_empty() {
        default_pool(b, grid.seed)
    } else {
        grid.param_points.iter().map(|&p| (p, None)).collect()
    }
}

/// Sweeps one bound; points where no side applies are skipped.
pub fn sweep_bound(b: &Bound, grid: &GridSpec, o: &SeriesOptions) -> Result<SweepReport> {
    grid.validate()?;
    o.validate()?;
    let params = params_for(b, grid);
    let results: Vec<Vec<CheckResult>> = params
        .par_iter()
        .map(|&(p, q)| {
            grid.x_points
                .iter()
                .map(|&x| check_bound(b, &args_for(b, p, q, x), o))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rep = SweepReport::new(b.id);
    for row in &results {
        for (i, r) in row.iter().enumerate() {
            if !r.valid {
                continue;
            }
            let rel = r.relative_margin();
            rep.record(r.args.p.mu, r.args.p.nu, r.args.x, rel, !r.holds());
            if i == 0 {
                let sides = [(b.lower.as_ref(), r.lower), (b.upper.as_ref(), r.upper)];
                for (side, check) in sides {
                    if let (Some(s), Some(c)) = (side, check) {
                        if s.sharp_at_zero {
                            rep.record_sharpness(c.ratio(r.target_value));
                        }
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}

/// [`sweep_bound`] by catalog id.
pub fn inequality_sweep(id: &str, grid: &GridSpec, o: &SeriesOptions) -> Result<SweepReport> {
    sweep_bound(lookup(id)?, grid, o)
}

/// Sweeps every catalog entry on the default pools and `grid`'s x points.
pub fn sweep_catalog(grid: &GridSpec, o: &SeriesOptions) -> Result<Vec<SweepReport>> {
    catalog().iter().map(|b| sweep_bound(b, grid, o)).collect()
}
