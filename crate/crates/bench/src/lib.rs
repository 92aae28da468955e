//! Fixed workloads shared by the criterion benches.

use lommel::ParamPoint;

/// Parameter points spread over the positivity region.
pub fn param_points() -> Vec<ParamPoint> {
    vec![
        ParamPoint::new(0.5, 0.5),
        ParamPoint::new(1.0, 0.0),
        ParamPoint::new(2.0, 1.0),
        ParamPoint::new(-2.0, 0.5),
        ParamPoint::new(4.5, -6.0),
    ]
}
