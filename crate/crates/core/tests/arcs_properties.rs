mod common;

use arclens::arcs::{compare_arcs, distribution_stats, find_extrema, ExtremumKind};
use arclens::smoothing::{dct_lowpass, loess_smooth, rolling_mean};
use proptest::prelude::*;

fn series() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, 30..300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extrema_alternate_and_are_ordered(y in series(), keep in 3usize..15, frac in 0.0f64..0.3) {
        let arc = dct_lowpass(&y, keep.min(y.len()), false).unwrap();
        let e = find_extrema(&arc, frac * arc.range());
        for w in e.points.windows(2) {
            prop_assert_ne!(w[0].kind, w[1].kind);
            prop_assert!(w[0].position < w[1].position);
        }
        for (k, p) in e.points.iter().enumerate() {
            prop_assert_eq!(&p.label, &format!("P{}", k + 1));
            prop_assert!(p.prominence >= e.min_prominence);
            prop_assert!(p.arc_index > 0 && p.arc_index < arc.len() - 1);
        }
    }

    #[test]
    fn global_extrema_are_first_argmax_and_argmin(y in series()) {
        let arc = rolling_mean(&y, 0.1).unwrap();
        let e = find_extrema(&arc, 0.0);
        let max = arc.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min = arc.values.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert_eq!(e.global_max.value, max);
        prop_assert_eq!(e.global_min.value, min);
        prop_assert_eq!(e.global_max.arc_index, arc.values.iter().position(|&v| v == max).unwrap());
        prop_assert_eq!(e.global_min.arc_index, arc.values.iter().position(|&v| v == min).unwrap());
        let flagged_max: Vec<_> = e.points.iter().filter(|p| p.is_global && p.kind == ExtremumKind::Max).collect();
        prop_assert!(flagged_max.len() <= 1);
        for p in flagged_max {
            prop_assert_eq!(p.value, max);
            prop_assert_eq!(e.global_max.label.as_deref(), Some(p.label.as_str()));
        }
    }

    #[test]
    fn compare_is_symmetric(y in series(), keep in 2usize..12) {
        let a = rolling_mean(&y, 0.1).unwrap();
        let b = dct_lowpass(&y, keep.min(y.len()), true).unwrap();
        let ab = compare_arcs(&a, &b, 100, 0.05).unwrap();
        let ba = compare_arcs(&b, &a, 100, 0.05).unwrap();
        prop_assert_eq!(ab.pearson_r, ba.pearson_r);
        prop_assert_eq!((ab.overlap_start, ab.overlap_end), (ba.overlap_start, ba.overlap_end));
        if let Some(r) = ab.pearson_r {
            prop_assert!((-1.0..=1.0).contains(&r));
        }
    }

    #[test]
    fn self_comparison_is_perfect(y in series()) {
        let a = loess_smooth(&y, 0.4).unwrap();
        let r = compare_arcs(&a, &a, 100, 0.05).unwrap();
        if let Some(r) = r.pearson_r {
            prop_assert!((r - 1.0).abs() <= 1e-12);
        }
    }
}

#[test]
fn distribution_stats_against_direct_formulas() {
    let y = common::noisy_series(101, 5);
    let s = distribution_stats(&y).unwrap();
    let n = y.len() as f64;
    let mean = y.iter().sum::<f64>() / n;
    let var = y.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let m2 = y.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let m3 = y.iter().map(|v| (v - mean).powi(3)).sum::<f64>() / n;
    assert!((s.mean - mean).abs() < 1e-12);
    assert!((s.variance - var).abs() < 1e-12);
    assert!((s.skewness.unwrap() - m3 / m2.powf(1.5)).abs() < 1e-12);
}
