use aqt_core::regions::enumerate_simplex;
use aqt_core::stats::{
    address, address_by_inversions, address_by_reflection, inversion_partition,
    inversion_partition_by_value_gap, ish_closed, ish_def, ish_inv, shi, shi_m,
};
use aqt_core::{FinitePermutation, RootLatticeVector, SimplexSpec, Window};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

/// `w + n r` from a random permutation and a zero-sum vector `r`.
fn window_of_rank(n: usize, spread: i64) -> impl Strategy<Value = Window> {
    (perm(n), prop::collection::vec(-spread..=spread, n - 1)).prop_map(move |(images, mut r)| {
        let last = -r.iter().sum::<i64>();
        r.push(last);
        Window::from_translation(
            &FinitePermutation::new(images).unwrap(),
            &RootLatticeVector::new(r).unwrap(),
        )
        .unwrap()
    })
}

fn window(max_n: usize, spread: i64) -> impl Strategy<Value = Window> {
    (2..=max_n).prop_flat_map(move |n| window_of_rank(n, spread))
}

fn same_rank_triple(max_n: usize) -> impl Strategy<Value = (Window, Window, Window)> {
    (2..=max_n).prop_flat_map(|n| {
        (
            window_of_rank(n, 2),
            window_of_rank(n, 2),
            window_of_rank(n, 2),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, ..ProptestConfig::default() })]

    #[test]
    fn inverse_is_an_involution(w in window(7, 3)) {
        let inv = w.invert();
        prop_assert_eq!(inv.invert(), w.clone());
        prop_assert!(w.compose(&inv).unwrap().is_identity());
        prop_assert!(inv.compose(&w).unwrap().is_identity());
        prop_assert_eq!(inv.length(), w.length());
    }

    #[test]
    fn composition_is_associative((a, b, c) in same_rank_triple(6)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn decompositions_recompose(w in window(7, 3)) {
        let (finite, rep) = w.parabolic_decompose();
        prop_assert!(rep.values().windows(2).all(|p| p[0] < p[1]));
        for k in 1..=w.n() {
            prop_assert_eq!(w.apply(k as i64), rep.apply(finite.apply(k) as i64));
        }
        let (perm, r) = w.translation_decompose();
        prop_assert_eq!(Window::from_translation(&perm, &r).unwrap(), w.clone());
    }

    #[test]
    fn text_and_json_round_trip(w in window(7, 3)) {
        prop_assert_eq!(w.to_string().parse::<Window>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Window>(&json).unwrap(), w);
    }

    #[test]
    fn length_counts_inversions(w in window(6, 2)) {
        prop_assert_eq!(w.length(), w.inversions().len());
        for y in w.neighbors() {
            prop_assert_eq!(y.length().abs_diff(w.length()), 1);
        }
    }

    #[test]
    fn statistics_of_the_inverse(w in window(6, 2)) {
        let inv = w.invert();
        prop_assert_eq!(shi(&w), shi(&inv));
        prop_assert_eq!(inversion_partition(&w), inversion_partition(&inv));
        prop_assert_eq!(inversion_partition_by_value_gap(&w), inversion_partition(&inv));
        prop_assert_eq!(ish_def(&w), ish_closed(&w));
        prop_assert_eq!(ish_inv(&w), ish_closed(&inv));
        prop_assert!(inversion_partition(&w).is_weakly_decreasing());
        prop_assert_eq!(shi_m(&w, 1), shi(&w));
    }

    #[test]
    fn addresses_agree_with_geometry(w in window(6, 2)) {
        let k = address(&w);
        prop_assert!(k.is_shi_admissible());
        prop_assert_eq!(&k, &address_by_inversions(&w));
        prop_assert_eq!(k, address_by_reflection(&w));
    }
}

#[test]
fn address_oracle_on_whole_simplex() {
    for w in enumerate_simplex(&SimplexSpec::new(3, 7).unwrap()) {
        assert_eq!(address(&w), address_by_reflection(&w), "{w}");
        assert_eq!(address(&w), address_by_inversions(&w), "{w}");
    }
}

#[test]
fn inverse_statistics_on_simplices() {
    for (n, p) in [(3, 4), (3, 7), (3, 5)] {
        for w in enumerate_simplex(&SimplexSpec::new(n, p).unwrap()) {
            let inv = w.invert();
            assert_eq!(shi(&w), shi(&inv));
            assert_eq!(inversion_partition(&w), inversion_partition(&inv));
            assert_eq!(ish_def(&w), ish_closed(&w));
            assert_eq!(ish_inv(&w), ish_closed(&inv));
        }
    }
}
