use num_traits::ToPrimitive;

use polycount_core::closed_form;
use polycount_core::halfplane::{wheels_not_p3_series, wheels_not_p3_series_without};
use polycount_core::oracle::{brute_force_counts, fixed_pair_counts};
use polycount_core::polytopes::{achiral_series, coefficient_table, oriented_polytope_series, polytope_series};
use polycount_core::wheels::WheelSeriesBundle;
use polycount_core::Exec;

#[test]
fn configuration_sum_matches_closed_form_to_200() {
    let n = 200;
    assert_eq!(wheels_not_p3_series(false, n), closed_form::wheels_not_p3().expand(n).unwrap());
    assert_eq!(wheels_not_p3_series(true, n), closed_form::oriented_wheels_not_p3().expand(n).unwrap());
    assert_ne!(wheels_not_p3_series_without(false, n, &[7]), closed_form::wheels_not_p3().expand(n).unwrap());
}

#[test]
fn every_p3_configuration_is_needed() {
    let reference = closed_form::wheels_not_p3().expand(40).unwrap();
    for i in 0..10 {
        assert_ne!(wheels_not_p3_series_without(false, 40, &[i]), reference, "configuration {i}");
    }
}

#[test]
fn oracle_matches_series_to_size_10() {
    let p = polytope_series(12).unwrap();
    let pp = oriented_polytope_series(12).unwrap();
    let pm = achiral_series(12).unwrap();
    for n in 5..=10u32 {
        let o = brute_force_counts(n, Exec::Parallel);
        let at = |s: &polycount_core::series::TruncatedSeries| s.coeff(n as usize).to_integer().to_u64().unwrap();
        assert_eq!((o.c, o.c_plus, o.c_minus), (at(&p), at(&pp), at(&pm)), "n={n}");
        assert_eq!(o.achiral_direct, o.c_minus, "n={n}");
    }
}

#[test]
fn oracle_fixed_points_match_bivariate_series() {
    let b = WheelSeriesBundle::compute(8);
    for n in 1..=8u32 {
        for (k, f) in fixed_pair_counts(n, Exec::Parallel) {
            let at = |s: &polycount_core::series::BivariateSeries| s.coeff(n as usize, k).to_integer().to_u64().unwrap();
            assert_eq!(f.rooted, at(&b.rooted), "R n={n} k={k}");
            assert_eq!(f.rotation_pairs, at(&b.rotation), "R+ n={n} k={k}");
            assert_eq!(f.reflection_pairs, at(&b.reflection), "R- n={n} k={k}");
        }
    }
}

#[test]
fn sequential_and_parallel_tables_agree() {
    assert_eq!(coefficient_table(300, Exec::Sequential).unwrap(), coefficient_table(300, Exec::Parallel).unwrap());
}

#[test]
fn table_invariants_to_500() {
    for r in coefficient_table(500, Exec::Parallel).unwrap() {
        assert!(r.c_minus <= r.c && r.c <= r.c_plus && r.c_plus <= &r.c * 2u32, "d={}", r.d);
        assert_eq!(&r.c * 2u32 - &r.c_plus, r.c_minus);
    }
}
