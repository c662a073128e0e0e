use lozenge_correlations::*;
use lozenge_formulas::{bits_for_digits, corner_correlation, tolerance, Real};

const X_GRID: [u64; 4] = [64, 128, 256, 512];

#[test]
fn corner_ratios_approach_the_limit() {
    for k in 0..=3 {
        for p in 0..=3 {
            let r = corner_convergence(k, p, &X_GRID, 50).unwrap();
            assert!(
                r.converges_within(0.05),
                "k={k} p={p}: {:?}",
                r.points.iter().map(|q| q.deviation.to_f64()).collect::<Vec<_>>()
            );
        }
    }
    assert_eq!(corner_correlation(1, 0), num_rational::BigRational::new(3.into(), 8.into()));
}

#[test]
fn bulk_law_is_approached() {
    let r = bulk_ratio_check(&[8, 16, 32, 64], 50).unwrap();
    assert!(r.converges_within(0.05));
}

#[test]
fn bulk_deviations_are_stable_under_precision() {
    let a = bulk_ratio_check(&[8, 16], 30).unwrap();
    let b = bulk_ratio_check(&[8, 16], 60).unwrap();
    for (x, y) in a.points.iter().zip(&b.points) {
        let diff = x.deviation.sub(&y.deviation).abs();
        let tol = tolerance(30);
        assert!(diff.cmp(&tol) != std::cmp::Ordering::Greater);
    }
}

#[test]
fn log_asymptotics_at_one_hundred() {
    let [r1, r2] = log_asymptotics_table(&[100], 50).unwrap();
    let d1 = r1.points[0].deviation.to_f64();
    let d2 = r2.points[0].deviation.to_f64();
    assert!(d1 < 0.005, "{d1}");
    assert!(d2 < 0.02, "{d2}");
    assert!((r1.points[0].value.to_f64() - r2.points[0].value.to_f64()).abs() < 0.02);
    let [r1, r2] = log_asymptotics_table(&[16, 32, 64, 128], 50).unwrap();
    assert!(r1.non_increasing() && r2.non_increasing());
}

#[test]
fn corner_ratio_is_positive_rational() {
    let bits = bits_for_digits(20);
    for (x, k, p) in [(8, 2, 1), (10, 2, 1), (30, 3, 2)] {
        let r = corner_ratio(x, k, p).unwrap();
        assert!(r > num_rational::BigRational::from_integer(0.into()));
        assert!(Real::from_rational(&r, bits).to_f64() < 1.0);
    }
}
