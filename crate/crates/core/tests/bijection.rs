use std::collections::BTreeSet;

use aqt_core::paths::{area_prime, from_labeled_path, realize_address, to_labeled_path};
use aqt_core::regions::enumerate_chambers;
use aqt_core::stats::{address, is_increasing_on_poset, ish_closed, shi};
use aqt_core::{choose2, LabeledPath, PositiveRoot, RootIdeal};

#[test]
fn chamber_minima_biject_onto_labeled_paths() {
    for n in 2..=4 {
        let chambers = enumerate_chambers(n, 1).unwrap();
        let mut images = BTreeSet::new();
        for (_, w) in &chambers {
            let path = to_labeled_path(w).unwrap();
            assert_eq!(from_labeled_path(&path).unwrap(), *w);
            assert_eq!(
                (choose2(n) - shi(w), ish_closed(w)),
                (area_prime(&path), path.ideal().bounce()),
                "{w}"
            );
            images.insert(serde_json::to_string(&path).unwrap());
        }
        let all: BTreeSet<String> = LabeledPath::all(n)
            .iter()
            .map(|p| serde_json::to_string(p).unwrap())
            .collect();
        assert_eq!(images, all, "n={n}");
    }
}

#[test]
fn sommers_addresses_are_realized() {
    for n in 1..=6 {
        for ideal in RootIdeal::all(n) {
            let k = ideal.sommers_address();
            assert!(k.is_shi_admissible());
            assert!(is_increasing_on_poset(&k));
            let w = realize_address(&k).unwrap();
            assert_eq!(address(&w), k);
            assert_eq!(RootIdeal::from_address(&k), ideal);
        }
    }
}

#[test]
fn worked_rank_nine_example() {
    let n = 9;
    let r = |a, b| PositiveRoot::new(a, b, n).unwrap();
    let ideal = RootIdeal::from_minimal_roots(n, &[r(1, 4), r(2, 6), r(6, 7), r(7, 9)]).unwrap();
    assert_eq!(ideal.bounce(), 15);
    let k = ideal.sommers_address();
    let top: Vec<i64> = (1..n).map(|a| k.get(r(a, n))).collect();
    assert_eq!(top, vec![3, 3, 2, 2, 2, 2, 1, 0]);
    assert_eq!(top.iter().sum::<i64>(), 15);
}

#[test]
fn top_row_of_sommers_address_sums_to_bounce() {
    for n in 2..=7 {
        for ideal in RootIdeal::all(n) {
            let k = ideal.sommers_address();
            let top: i64 = (1..n)
                .map(|a| k.get(PositiveRoot::new(a, n, n).unwrap()))
                .sum();
            assert_eq!(top, ideal.bounce(), "{:?}", ideal.to_pairs());
        }
    }
}
