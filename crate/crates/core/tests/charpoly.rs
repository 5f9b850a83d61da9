use aqt_core::arr::{
    charpoly_ff, charpoly_ff_with_primes, default_primes, ish_cyclic_count, primes_above,
    quotient_view, zaslavsky_counts_u128,
};
use aqt_core::{Arrangement, Family, QPoly};

const BUDGET: u128 = 1 << 40;

/// `q (q - c)^(n-1)` expanded.
fn q_times_shifted_power(c: i64, n: usize) -> QPoly {
    let linear = QPoly::from_i64s(&[-c, 1]);
    &QPoly::monomial(1, 1) * &linear.pow(n as u32 - 1)
}

#[test]
fn shi_and_ish_share_a_polynomial() {
    for n in 2..=4 {
        let want = q_times_shifted_power(n as i64, n);
        for family in [Family::Shi, Family::Ish] {
            let arr = Arrangement::build(family, n).unwrap();
            assert_eq!(charpoly_ff(&arr, BUDGET).unwrap(), want, "{family} n={n}");
        }
    }
}

#[test]
fn extended_shi_polynomials() {
    for (n, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let arr = Arrangement::build(Family::ShiM(m), n).unwrap();
        let chi = charpoly_ff(&arr, BUDGET).unwrap();
        assert_eq!(
            chi,
            q_times_shifted_power(m as i64 * n as i64, n),
            "n={n} m={m}"
        );
        let quotient = quotient_view(&chi).unwrap();
        assert_eq!(
            quotient,
            QPoly::from_i64s(&[-(m as i64 * n as i64), 1]).pow(n as u32 - 1)
        );
    }
}

#[test]
fn coxeter_is_falling_factorial() {
    for n in 2..=4 {
        let chi = charpoly_ff(&Arrangement::build(Family::Cox, n).unwrap(), BUDGET).unwrap();
        let want = (0..n as i64).fold(QPoly::one(), |acc, k| &acc * &QPoly::from_i64s(&[-k, 1]));
        assert_eq!(chi, want);
    }
}

#[test]
fn independent_of_prime_set() {
    for family in [Family::Shi, Family::Ish, Family::ShiM(2)] {
        let arr = Arrangement::build(family, 3).unwrap();
        let first = default_primes(&arr);
        let second = primes_above(*first.last().unwrap(), first.len());
        assert_eq!(
            charpoly_ff_with_primes(&arr, &first, BUDGET).unwrap(),
            charpoly_ff_with_primes(&arr, &second, BUDGET).unwrap()
        );
    }
}

#[test]
fn cyclic_count_matches_brute_force() {
    for n in 2..=4 {
        let arr = Arrangement::build(Family::Ish, n).unwrap();
        for p in primes_above(n as u64, 6) {
            assert_eq!(
                ish_cyclic_count(n, p),
                arr.count_complement(p),
                "n={n} p={p}"
            );
        }
    }
}

#[test]
fn zaslavsky_values() {
    for family in [Family::Shi, Family::Ish] {
        let chi3 = charpoly_ff(&Arrangement::build(family, 3).unwrap(), BUDGET).unwrap();
        assert_eq!(zaslavsky_counts_u128(&chi3, 3), (16, 4));
        let chi4 = charpoly_ff(&Arrangement::build(family, 4).unwrap(), BUDGET).unwrap();
        assert_eq!(zaslavsky_counts_u128(&chi4, 4), (125, 27));
    }
    assert_eq!(
        zaslavsky_counts_u128(&q_times_shifted_power(8, 4), 4),
        (729, 343)
    );
}
