use proptest::prelude::*;

use polycount_core::oracle::{
    canonical_form, enumerate_wheel_sequences, orbit_count, satisfies_p3, window_condition, Group, WheelSequence,
};

fn wheel() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=5)
        .prop_flat_map(|k| prop::collection::vec(0u32..4, 2 * k))
        .prop_filter("wheel-sequence", |v| WheelSequence::new(v.clone()).is_ok())
}

fn rotate(v: &[u32], l: usize) -> Vec<u32> {
    (0..v.len()).map(|j| v[(j + l) % v.len()]).collect()
}

fn reverse(v: &[u32]) -> Vec<u32> {
    v.iter().rev().copied().collect()
}

proptest! {
    #[test]
    fn canonical_form_is_orbit_invariant(v in wheel(), l in 0usize..10) {
        let r = rotate(&v, l % v.len());
        prop_assert_eq!(canonical_form(&r, Group::Cyclic), canonical_form(&v, Group::Cyclic));
        prop_assert_eq!(canonical_form(&reverse(&r), Group::Dihedral), canonical_form(&v, Group::Dihedral));
        prop_assert!(canonical_form(&v, Group::Dihedral) <= canonical_form(&v, Group::Cyclic));
    }

    #[test]
    fn p3_is_symmetric(v in wheel(), l in 0usize..10) {
        let r = rotate(&v, l % v.len());
        prop_assert_eq!(window_condition(&r), window_condition(&v));
        prop_assert_eq!(window_condition(&reverse(&v)), window_condition(&v));
    }

    #[test]
    fn large_wheels_satisfy_p3(k in 5usize..8, seed in prop::collection::vec(1u32..3, 16)) {
        // no zeros and at least five diameters: every window has weight >= 4
        let v: Vec<u32> = seed.into_iter().cycle().take(2 * k).collect();
        prop_assert!(satisfies_p3(&WheelSequence::new(v).unwrap()));
    }
}

#[test]
fn orbits_never_exceed_oriented_orbits() {
    for n in 1..=9 {
        let s = enumerate_wheel_sequences(n);
        let d = orbit_count(&s, Group::Dihedral);
        let c = orbit_count(&s, Group::Cyclic);
        assert!(d <= c && c <= 2 * d, "n={n}: {d} {c}");
    }
}
