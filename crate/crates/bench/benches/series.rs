use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lommel::bounds::BoundArgs;
use lommel::verify::{self, grid::log_space, CoeffPair, GridSpec};
use lommel::{check, lommel_t_tilde, lommel_t_tilde_prime, recurrence_residuals, ParamPoint, SeriesOptions};
use lommel_bench::param_points;

fn t_tilde_by_x(c: &mut Criterion) {
    let o = SeriesOptions::default();
    let p = ParamPoint::new(1.0, 0.5);
    let mut g = c.benchmark_group("t_tilde");
    for x in [1e-3, 1.0, 10.0, 40.0, 200.0] {
        g.bench_with_input(BenchmarkId::from_parameter(x), &x, |b, &x| {
            b.iter(|| lommel_t_tilde(black_box(p), black_box(x), &o).unwrap())
        });
    }
    g.finish();
}

fn grid_evaluation(c: &mut Criterion) {
    let o = SeriesOptions::default();
    let xs = log_space(1e-3, 30.0, 60);
    let ps = param_points();
    c.bench_function("t_tilde/5x60 grid", |b| {
        b.iter(|| {
            let mut s = 0.0;
            for &p in &ps {
                for &x in &xs {
                    s += lommel_t_tilde(p, x, &o).unwrap().value;
                    s += lommel_t_tilde_prime(p, x, &o).unwrap().value;
                }
            }
            s
        })
    });
}

fn residuals_and_bounds(c: &mut Criterion) {
    let o = SeriesOptions::default();
    let p = ParamPoint::new(1.0, 0.5);
    c.bench_function("recurrence_residuals", |b| {
        b.iter(|| recurrence_residuals(black_box(p), black_box(3.0), &o).unwrap())
    });
    let mut g = c.benchmark_group("check");
    for id in ["B5", "B6", "B13", "B17"] {
        g.bench_function(id, |b| b.iter(|| check(id, &BoundArgs::new(p, 3.0), &o).unwrap()));
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let o = SeriesOptions::default();
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    g.bench_function("B13 default grid", |b| {
        let grid = GridSpec::inequality_default();
        b.iter(|| verify::inequality::inequality_sweep("B13", &grid, &o).unwrap())
    });
    g.bench_function("sequence ratio K=200", |b| {
        b.iter(|| verify::sequence_ratio_check(CoeffPair::Sinh, ParamPoint::new(0.0, -2.1), None, 200).unwrap())
    });
    g.bench_function("unimodality_locate", |b| {
        b.iter(|| verify::unimodality_locate(verify::UNIMODAL_POINT, 1e-3, 40.0, &o).unwrap())
    });
    g.finish();
}

criterion_group!(benches, t_tilde_by_x, grid_evaluation, residuals_and_bounds, sweeps);
criterion_main!(benches);
