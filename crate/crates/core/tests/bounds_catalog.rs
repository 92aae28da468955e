mod common;

use std::collections::HashSet;

use lommel::bounds::{lambda_constant, regions, sandwich_constant, turan_delta, BUDGET_FACTOR};
use lommel::*;

fn o() -> SeriesOptions {
    SeriesOptions::default()
}

fn p(mu: f64, nu: f64) -> ParamPoint {
    ParamPoint::new(mu, nu)
}

#[test]
fn registry_is_complete_and_unique() {
    let ids: Vec<&str> = catalog().iter().map(|b| b.id).collect();
    let unique: HashSet<&str> = ids.iter().copied().collect();
    assert_eq!(ids.len(), 22);
    assert_eq!(unique.len(), 22);
    for n in 1..=18 {
        assert!(unique.contains(format!("B{n}").as_str()));
    }
    for n in 1..=4 {
        let r = lookup(&format!("B{n}R")).unwrap();
        assert_eq!(r.reverses, Some(["B1", "B2", "B3", "B4"][n - 1]));
    }
    assert!(matches!(lookup("B99"), Err(Error::UnknownId(_))));
}

#[test]
fn constants() {
    assert!((sandwich_constant(p(0.5, 0.5)).unwrap() - 3f64.sqrt()).abs() < 1e-14);
    let a = 1.0 - (std::f64::consts::PI / 4.0).powi(2);
    assert!((lambda_constant(p(0.0, 0.0)).unwrap() - a).abs() < 1e-14);
}

#[test]
fn sharp_log_derivative_margin_vanishes() {
    let checks: Vec<CheckResult> = [1e-1, 1e-2, 1e-3, 1e-6]
        .iter()
        .map(|&x| check("B5", &BoundArgs::new(p(2.0, 1.0), x), &o()).unwrap())
        .collect();
    assert!(checks.iter().all(CheckResult::holds));
    // The slack is O(x²): resolved above rounding down to x = 1e−3, then lost in it.
    assert!(checks[..3].iter().all(|r| r.margin > r.budget));
    assert!(checks[..3].windows(2).all(|w| w[1].margin < w[0].margin / 50.0));
    assert!(checks[3].margin.abs() < 1e-10);
}

#[test]
fn turan_upper_ratio_at_origin() {
    let r = check("B13", &BoundArgs::new(p(0.0, 0.0), 1e-4), &o()).unwrap();
    let t = lommel_t_tilde(p(0.0, 0.0), 1e-4, &o()).unwrap().value;
    assert!((r.target_value / (t * t) - 2.0 / 3.0).abs() < 1e-6);
    assert!((r.upper.unwrap().ratio(r.target_value) - 1.0).abs() < 1e-6);
}

#[test]
fn two_point_ratio_against_oracle() {
    let r = check("B10", &BoundArgs::new(p(1.0, 0.0), 1.0).with_y(2.0), &o()).unwrap();
    assert!(r.valid && r.holds());
    let exact = (common::t_tilde(1.0, 0.0, 1.0) / common::t_tilde(1.0, 0.0, 2.0)).to_f64();
    assert!((r.target_value - exact).abs() < 1e-14);
    assert!(exact < 0.25);
    // y ≤ x violates the precondition.
    assert!(matches!(
        check("B10", &BoundArgs::new(p(1.0, 0.0), 2.0).with_y(1.0), &o()),
        Err(Error::Domain(_))
    ));
}

#[test]
fn invalid_region_is_reported_not_fatal() {
    let r = check("B3", &BoundArgs::new(p(0.0, 2.0), 1.0), &o()).unwrap();
    assert!(!r.valid);
    assert!(r.lower.is_none() && r.upper.is_none());
    assert!(r.margin.is_nan());
}

#[test]
fn reversed_variants_hold_with_opposite_sign() {
    let cases = [
        ("B1R", BoundArgs::new(p(0.5, 2.0), 1.5)),
        ("B2R", BoundArgs::new(p(0.5, 2.0), 1.5)),
        ("B3R", BoundArgs::new(p(0.5, 2.0), 1.5)),
        ("B4R", BoundArgs::new(p(1.0, 0.5), 1.5).with_p1(p(2.0, 1.0))),
    ];
    for (id, a) in cases {
        let r = check(id, &a, &o()).unwrap();
        assert!(r.valid && r.holds(), "{id}");
        let forward = lookup(id).unwrap().reverses.unwrap();
        let f = check(forward, &a, &o()).unwrap();
        if f.valid {
            assert!(!f.holds(), "{forward} should fail where {id} applies");
        }
    }
}

#[test]
fn asymptotic_order_of_growth() {
    for (id, q) in [
        ("B3", p(1.0, 0.5)),
        ("B7", p(1.0, 0.5)),
        ("B8", p(1.0, 0.5)),
        ("B14", p(1.0, 0.5)),
    ] {
        let b = lookup(id).unwrap();
        let scaled: Vec<f64> = [10.0, 20.0, 30.0, 40.0]
            .iter()
            .map(|&x| {
                let r = check(id, &BoundArgs::new(q, x), &o()).unwrap();
                r.upper.unwrap().value * b.target.large_x_scale(x)
            })
            .collect();
        let (lo, hi) = scaled
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
        assert!(lo > 0.0 && hi / lo < 10.0, "{id}: {scaled:?}");
    }
}

#[test]
fn turan_bracket_and_delta_positive() {
    for q in [p(0.0, 0.0), p(-2.0, 0.5), p(3.0, -4.0), p(1.0, 0.5)] {
        for x in [1e-3, 1e-2, 0.5, 5.0, 30.0] {
            let d = turan_delta(q, x, &o()).unwrap();
            assert!(d.delta > BUDGET_FACTOR * d.err, "{q:?} x={x}");
            let r = check("B13", &BoundArgs::new(q, x), &o()).unwrap();
            assert!(r.holds());
            let (lo, up) = (r.lower.unwrap(), r.upper.unwrap());
            assert!(lo.value <= d.delta + lo.budget && d.delta <= up.value + up.budget);
        }
    }
}

#[test]
fn sinh_validity_examples() {
    let v = regions::sinh_validity(p(0.0, 0.0));
    assert!((regions::sinh_quadratic(p(0.0, 0.0), 0.0) - 11.25).abs() < 1e-12);
    assert!(v.cond1 && v.p_nonneg);
    // P(0) = (μ+ν+3)(5μ+7ν+15)/4: positive at (0,−2.1), where the regime
    // −μ−2 < ν < −5(μ+3)/7 is empty, and negative inside it at (2,−3.8).
    assert!((regions::sinh_quadratic(p(0.0, -2.1), 0.0) - 0.0675).abs() < 1e-12);
    assert!(regions::sinh_quadratic(p(2.0, -3.8), 0.0) < 0.0);
    assert!(!regions::unimodal_regime(p(0.0, -2.1)));
    assert!(regions::unimodal_regime(p(2.0, -3.8)));
}

#[test]
fn every_entry_checks_somewhere() {
    for b in catalog() {
        let a = match b.id {
            "B4" => BoundArgs::new(p(2.0, 1.0), 0.8).with_p1(p(1.0, 0.5)),
            "B4R" => BoundArgs::new(p(1.0, 0.5), 0.8).with_p1(p(2.0, 1.0)),
            "B10" => BoundArgs::new(p(1.0, 0.5), 0.8).with_y(1.6),
            id if id.ends_with('R') => BoundArgs::new(p(0.5, 2.0), 0.8),
            _ => BoundArgs::new(p(1.0, 0.7), 0.8),
        };
        let r = check_bound(b, &a);
        assert!(r.valid && r.holds(), "{}", b.id);
    }
}

fn check_bound(b: &Bound, a: &BoundArgs) -> CheckResult {
    lommel::bounds::check_bound(b, a, &o()).unwrap()
}
