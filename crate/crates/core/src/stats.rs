//! The `shi`, `shi^m`, `ish` and `ish^-1` statistics, inversion partitions,
//! and alcove addresses.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::afperm::Window;
pub use crate::roots::{Address, PositiveRoot};

/// Number of Shi hyperplanes separating the alcove of `w` from the
/// fundamental alcove: inversions `((i, j))` with `j < n + i`.
pub fn shi(w: &Window) -> i64 {
    shi_m(w, 1)
}

/// Number of inversions of height `<= m - 1`, i.e. hyperplanes of `Shi^m(n)`
/// separating `w` from the fundamental alcove.
pub fn shi_m(w: &Window, m: u32) -> i64 {
    assert!(m >= 1, "shi_m needs m >= 1");
    let n = w.n() as i64;
    let mut count = 0;
    w.for_each_inversion(|i, j| {
        if (j - i).div_euclid(n) < m as i64 {
            count += 1;
        }
    });
    count
}

/// `ish` straight from its definition: inversions `((n, j))` of the minimal
/// coset representative `w^I`.
pub fn ish_def(w: &Window) -> i64 {
    let (_, rep) = w.parabolic_decompose();
    let n = rep.n() as i64;
    let mut count = 0;
    rep.for_each_inversion(|i, _| {
        if i == n {
            count += 1;
        }
    });
    count
}

/// `ish(w) = max(window) - n`.
pub fn ish_closed(w: &Window) -> i64 {
    w.values().iter().copied().max().expect("nonempty window") - w.n() as i64
}

/// `ish(w^-1)` from the translation part `r` of `w = w_0 + n r`: with `j` the
/// largest index at which `r` is minimal, the value is `j + n(-r(j) - 1)`.
pub fn ish_inv(w: &Window) -> i64 {
    let (_, r) = w.translation_decompose();
    let min = *r.0.iter().min().expect("nonempty window");
    let j =
        r.0.iter()
            .rposition(|&x| x == min)
            .expect("minimum present")
            + 1;
    j as i64 + w.n() as i64 * (-min - 1)
}

/// Counts `(I_0, I_1, ...)` of inversions by height, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InversionPartition {
    pub counts: Vec<u64>,
}

impl InversionPartition {
    fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.counts.windows(2).all(|p| p[0] >= p[1])
    }
}

fn bucket(counts: &mut Vec<u64>, k: usize) {
    if counts.len() <= k {
        counts.resize(k + 1, 0);
    }
    counts[k] += 1;
}

/// `I_k` = number of inversions `((i, j))` with `floor((j - i) / n) = k`.
pub fn inversion_partition(w: &Window) -> InversionPartition {
    let n = w.n() as i64;
    let mut counts = Vec::new();
    w.for_each_inversion(|i, j| bucket(&mut counts, (j - i).div_euclid(n) as usize));
    InversionPartition::from_counts(counts)
}

/// Inversions bucketed by value gap, `floor((w(i) - w(j)) / n)`. This is the
/// height partition of `w^-1`, computed without inverting.
pub fn inversion_partition_by_value_gap(w: &Window) -> InversionPartition {
    let n = w.n() as i64;
    let mut counts = Vec::new();
    w.for_each_inversion(|i, j| {
        bucket(
            &mut counts,
            (w.apply(i) - w.apply(j)).div_euclid(n) as usize,
        )
    });
    InversionPartition::from_counts(counts)
}

/// Address of the alcove of `w`: `k(e_a - e_b) = floor((w(b) - w(a) - 1) / n)`.
pub fn address(w: &Window) -> Address {
    let n = w.n() as i64;
    let v = w.values();
    Address::from_fn(w.n(), |r| (v[r.b() - 1] - v[r.a() - 1] - 1).div_euclid(n))
}

/// Address read off the inversion set: a root whose level-0 hyperplane is
/// an inversion gets minus the number of separating hyperplanes parallel to
/// it, otherwise plus that number.
pub fn address_by_inversions(w: &Window) -> Address {
    let n = w.n();
    let mut count = vec![0i64; crate::roots::root_count(n)];
    let mut crosses_zero = vec![false; count.len()];
    w.for_each_inversion(|i, j| {
        let t = crate::afperm::AffineTransposition::new(i, j, n).expect("inversion is standard");
        let (root, level) = t.hyperplane(n);
        let idx = root.index(n);
        count[idx] += 1;
        if level == 0 {
            crosses_zero[idx] = true;
        }
    });
    let values = count
        .into_iter()
        .zip(crosses_zero)
        .map(|(c, neg)| if neg { -c } else { c })
        .collect();
    Address::from_values(n, values).expect("root count matches")
}

/// Address computed geometrically: an interior point of the fundamental
/// alcove is pushed through the reflections of a reduced word for `w`, and
/// each `k(e_a - e_b)` is the floor of `x_a - x_b` there.
pub fn address_by_reflection(w: &Window) -> Address {
    let n = w.n();
    let ni = n as i64;
    // peel descents: w = w' . s_i with l(w') = l(w) - 1
    let mut word = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let i = (1..=n)
            .find(|&i| cur.apply(i as i64) > cur.apply(i as i64 + 1))
            .expect("non-identity element has a descent");
        word.push(i);
        cur = cur.right_multiply_generator(i);
    }
    // coordinates scaled by n; (n-1, ..., 0)/n is interior to the fundamental alcove
    let mut x: Vec<i64> = (0..ni).rev().collect();
    for &i in word.iter().rev() {
        let (a, b, level) = if i < n { (i - 1, i, 0) } else { (0, n - 1, 1) };
        let d = x[a] - x[b] - ni * level;
        x[a] -= d;
        x[b] += d;
    }
    Address::from_fn(n, |r| (x[r.a() - 1] - x[r.b() - 1]).div_euclid(ni))
}

/// Statistic record emitted by the command-line `stat` query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRecord {
    pub window: Window,
    pub length: i64,
    pub shi: i64,
    pub ish: i64,
    /// `shi^m` for `m = 1` up to the first `m` at which it equals the length.
    pub shi_m: BTreeMap<u32, i64>,
    pub ish_inv: i64,
    pub inversion_partition: InversionPartition,
}

impl StatRecord {
    pub fn of(w: &Window) -> Self {
        let partition = inversion_partition(w);
        let mut shi_m = BTreeMap::new();
        let mut acc = 0;
        for m in 1..=partition.counts.len().max(1) {
            acc += partition.counts.get(m - 1).copied().unwrap_or(0) as i64;
            shi_m.insert(m as u32, acc);
        }
        Self {
            window: w.clone(),
            length: w.length() as i64,
            shi: shi(w),
            ish: ish_closed(w),
            shi_m,
            ish_inv: ish_inv(w),
            inversion_partition: partition,
        }
    }
}

/// True when `k` is weakly increasing along the root poset.
pub fn is_increasing_on_poset(k: &Address) -> bool {
    let n = k.n();
    PositiveRoot::all(n).all(|r| {
        let up_left = (r.a() > 1).then(|| PositiveRoot::new(r.a() - 1, r.b(), n).unwrap());
        let up_right = (r.b() < n).then(|| PositiveRoot::new(r.a(), r.b() + 1, n).unwrap());
        [up_left, up_right]
            .into_iter()
            .flatten()
            .all(|s| k.get(s) >= k.get(r))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Window {
        Window::new(v.to_vec()).unwrap()
    }

    fn root(a: usize, b: usize, n: usize) -> PositiveRoot {
        PositiveRoot::new(a, b, n).unwrap()
    }

    #[test]
    fn shi_examples() {
        assert_eq!(shi(&w(&[1, 5, 0])), 3);
        assert_eq!(shi(&Window::identity(3)), 0);
        assert_eq!(shi(&w(&[-1, 4, 3])), 3);
    }

    #[test]
    fn shi_m_examples() {
        assert_eq!(shi_m(&w(&[1, 5, 0]), 1), 3);
        assert_eq!(shi_m(&w(&[1, 5, 0]), 2), 4);
        assert_eq!(shi_m(&Window::identity(3), 5), 0);
    }

    #[test]
    fn ish_examples() {
        for f in [ish_def, ish_closed] {
            assert_eq!(f(&w(&[-1, 4, 3])), 1);
            assert_eq!(f(&Window::identity(3)), 0);
            assert_eq!(f(&w(&[1, 5, 0])), 2);
        }
    }

    #[test]
    fn ish_inv_examples() {
        assert_eq!(ish_inv(&w(&[-2, 2, 6])), 1);
        assert_eq!(ish_inv(&Window::identity(3)), 0);
        assert_eq!(ish_inv(&w(&[4, 2, 0])), 3);
        assert_eq!(ish_closed(&w(&[4, 2, 0])), 1);
        assert_eq!(ish_closed(&w(&[-2, 2, 6])), 3);
    }

    #[test]
    fn inversion_partition_examples() {
        assert_eq!(inversion_partition(&w(&[-2, 2, 6])).counts, vec![3, 1]);
        assert_eq!(inversion_partition(&w(&[4, 2, 0])).counts, vec![3, 1]);
        assert!(inversion_partition(&Window::identity(4)).counts.is_empty());
        let x = w(&[-2, 2, 6]);
        assert_eq!(
            inversion_partition_by_value_gap(&x),
            inversion_partition(&x.invert())
        );
    }

    #[test]
    fn address_examples() {
        assert_eq!(address(&Window::identity(4)), Address::zero(4));
        let k = address(&w(&[0, 2, 4]));
        assert_eq!(k.get(root(1, 3, 3)), 1);
        assert_eq!(k.get(root(1, 2, 3)), 0);
        assert_eq!(k.get(root(2, 3, 3)), 0);
        // [1,5,0]: crosses e1-e3=0, e2-e3=0, e2-e3=-1 and e1-e2=1
        let k = address(&w(&[1, 5, 0]));
        assert_eq!(k.values(), &[1, -1, -2]);
        assert!(k.is_shi_admissible());
    }

    #[test]
    fn address_oracle_agrees_on_examples() {
        for v in [[1, 5, 0], [-1, 4, 3], [0, 2, 4], [-2, 2, 6], [4, 2, 0]] {
            let x = w(&v);
            assert_eq!(address(&x), address_by_reflection(&x), "{x}");
            assert_eq!(address(&x), address_by_inversions(&x), "{x}");
        }
    }

    #[test]
    fn stat_record() {
        let rec = StatRecord::of(&w(&[1, 5, 0]));
        assert_eq!(rec.shi, 3);
        assert_eq!(rec.ish, 2);
        assert_eq!(rec.length, 4);
        assert_eq!(rec.shi_m.get(&2), Some(&4));
        let id = StatRecord::of(&Window::identity(3));
        assert_eq!((id.shi, id.ish, id.length, id.ish_inv), (0, 0, 0, 0));
    }
}
