//! Reproducible parameter pools: random interior points plus points placed
//! just inside the boundary of a validity region.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distance from the boundary at which near-boundary points are placed.
pub const BOUNDARY_OFFSET: f64 = 1e-3;

const MAX_TRIES: usize = 20_000;

pub(crate) struct Sampler<'a> {
    rng: ChaCha8Rng,
    lo: &'a [f64],
    hi: &'a [f64],
    valid: &'a dyn Fn(&[f64]) -> bool,
}

impl<'a> Sampler<'a> {
    pub fn new(seed: u64, lo: &'a [f64], hi: &'a [f64], valid: &'a dyn Fn(&[f64]) -> bool) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            lo,
            hi,
            valid,
        }
    }

    fn uniform(&mut self) -> Vec<f64> {
        self.lo
            .iter()
            .zip(self.hi)
            .map(|(&l, &h)| self.rng.random_range(l..h))
            .collect()
    }

    pub fn interior(&mut self) -> Option<Vec<f64>> {
        let valid = self.valid;
        (0..MAX_TRIES).map(|_| self.uniform()).find(|v| valid(v))
    }

    /// A point at distance [`BOUNDARY_OFFSET`] inside the region, found by
    /// bisecting along a random ray from an interior point.
    pub fn near_boundary(&mut self) -> Option<Vec<f64>> {
        for _ in 0..200 {
            let v = self.interior()?;
            let mut dir: Vec<f64> = (0..v.len()).map(|_| self.rng.random_range(-1.0..1.0)).collect();
            let norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
            if norm < 1e-3 {
                continue;
            }
            dir.iter_mut().for_each(|d| *d /= norm);
            let at = |t: f64| -> Vec<f64> { v.iter().zip(&dir).map(|(a, d)| a + t * d).collect() };
            // Largest step that stays inside the sampling box.
            let t_box = v
                .iter()
                .zip(&dir)
                .zip(self.lo.iter().zip(self.hi))
                .map(|((&a, &d), (&l, &h))| if d > 0.0 { (h - a) / d } else { (l - a) / d })
                .fold(f64::INFINITY, f64::min);
            if (self.valid)(&at(t_box)) {
                continue;
            }
            let (mut inside, mut outside) = (0.0, t_box);
            for _ in 0..60 {
                let mid = 0.5 * (inside + outside);
                if (self.valid)(&at(mid)) {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            let t = inside - BOUNDARY_OFFSET;
            if t > 0.0 {
                let p = at(t);
                if (self.valid)(&p) {
                    return Some(p);
                }
            }
        }
        None
    }

    /// `n_boundary` near-boundary points followed by `n_interior` interior points.
    pub fn pool(&mut self, n_boundary: usize, n_interior: usize) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = (0..n_boundary).filter_map(|_| self.near_boundary()).collect();
        out.extend((0..n_interior).filter_map(|_| self.interior()));
        out
    }
}

/// The (μ, ν) box pools are drawn from.
pub const PARAM_LO: [f64; 2] = [-3.0, -9.0];
pub const PARAM_HI: [f64; 2] = [6.0, 9.0];
