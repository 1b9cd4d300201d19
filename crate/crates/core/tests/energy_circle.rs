//! Circle expansion truncation-error scaling against the exact sums.

use energy_lab_core::energy::{circle_exact, circle_expansion};
use energy_lab_oracles::ls_slope;

#[test]
fn truncation_error_slope_at_p0() {
    // With p = 0 the first dropped term scales like N^{s-1}; for s = 1/2
    // the absolute error should decay with slope -1/2 on a log-log grid.
    let s = 0.5;
    let ns = [100u64, 1000, 10_000, 100_000];
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &n in &ns {
        let err = (circle_exact(s, n).unwrap() - circle_expansion(s, n, 0).unwrap()).abs();
        xs.push((n as f64).ln());
        ys.push(err.ln());
    }
    let slope = ls_slope(&xs, &ys);
    assert!(
        (slope + 0.5).abs() <= 0.05,
        "p=0 error slope {slope}, expected -0.5"
    );
}

#[test]
fn truncation_error_slope_at_p1() {
    // First dropped term at order p scales like N^{s-1-2p}.
    for (s, ns, expected) in [
        (0.5f64, vec![50u64, 79, 126, 200, 316, 500], -2.5f64),
        (-1.0, vec![10, 16, 25, 40, 63, 100], -4.0),
    ] {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &n in &ns {
            let err = (circle_exact(s, n).unwrap() - circle_expansion(s, n, 1).unwrap()).abs();
            xs.push((n as f64).ln());
            ys.push(err.ln());
        }
        let slope = ls_slope(&xs, &ys);
        assert!(
            (slope - expected).abs() <= 0.1,
            "s={s}: slope {slope}, expected {expected}"
        );
    }
}

#[test]
fn high_order_truncation_is_below_rounding_at_scale() {
    for &s in &[-1.0f64, 0.5] {
        let n = 10_000u64;
        let exact = circle_exact(s, n).unwrap();
        let exp = circle_expansion(s, n, 3).unwrap();
        let rel = ((exact - exp) / exact).abs();
        assert!(rel <= 1e-10, "s={s}: relative difference {rel}");
    }
}
