//! Positive roots of type A and integer functions on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The positive root `e_a - e_b` with `1 <= a < b <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    a: usize,
    b: usize,
}

impl PositiveRoot {
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || a >= b || b > n {
            return Err(Error::BadRoot { a, b, n });
        }
        Ok(Self { a, b })
    }

    pub(crate) const fn new_unchecked(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Sum of coefficients in the simple-root basis.
    pub fn height(&self) -> usize {
        self.b - self.a
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }

    /// Root-poset order: `e_j - e_k <= e_i - e_l` iff `i <= j < k <= l`.
    pub fn le(&self, other: &PositiveRoot) -> bool {
        other.a <= self.a && self.b <= other.b
    }

    /// All positive roots of rank `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = PositiveRoot> {
        (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| PositiveRoot { a, b }))
    }

    /// Position of this root in [`PositiveRoot::all`].
    pub fn index(&self, n: usize) -> usize {
        // roots with first index < a come first
        let before = (self.a - 1) * n - (self.a - 1) * self.a / 2;
        before + (self.b - self.a - 1)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.a, self.b)
    }
}

/// Number of positive roots in rank `n`.
pub fn root_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An integer function on the positive roots; for an alcove `A` this is its
/// address `k_A`, with `k_A(a) < (x, a) < k_A(a) + 1` on `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address {
    n: usize,
    values: Vec<i64>,
}

impl Address {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            values: vec![0; root_count(n)],
        }
    }

    /// Builds an address from values listed in [`PositiveRoot::all`] order.
    pub fn from_values(n: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != root_count(n) {
            return Err(Error::BadLength {
                expected: root_count(n),
                found: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(PositiveRoot) -> i64) -> Self {
        Self {
            n,
            values: PositiveRoot::all(n).map(&mut f).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, root: PositiveRoot) -> i64 {
        self.values[root.index(self.n)]
    }

    pub fn set(&mut self, root: PositiveRoot, value: i64) {
        let idx = root.index(self.n);
        self.values[idx] = value;
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (PositiveRoot, i64)> + '_ {
        PositiveRoot::all(self.n).zip(self.values.iter().copied())
    }

    /// Shi's characterization: `k(a) + k(b) <= k(a+b) <= k(a) + k(b) + 1`
    /// for every summable pair of positive roots.
    pub fn is_shi_admissible(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in i + 1..=n {
                for l in j + 1..=n {
                    let x = self.get(PositiveRoot::new_unchecked(i, j));
                    let y = self.get(PositiveRoot::new_unchecked(j, l));
                    let s = self.get(PositiveRoot::new_unchecked(i, l));
                    if s < x + y || s > x + y + 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration_order() {
        for n in 1..7 {
            for (idx, root) in PositiveRoot::all(n).enumerate() {
                assert_eq!(root.index(n), idx);
            }
            assert_eq!(PositiveRoot::all(n).count(), root_count(n));
        }
    }

    #[test]
    fn poset_order() {
        let r = |a, b| PositiveRoot::new(a, b, 9).unwrap();
        assert!(r(2, 3).le(&r(1, 4)));
        assert!(r(2, 3).le(&r(2, 3)));
        assert!(!r(1, 4).le(&r(2, 3)));
        assert!(!r(1, 2).le(&r(2, 3)));
        assert!(PositiveRoot::new(3, 3, 9).is_err());
        assert!(PositiveRoot::new(1, 10, 9).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(Address::zero(4).is_shi_admissible());
        // k(e1-e2) = k(e2-e3) = 1, k(e1-e3) = 0 breaks the lower bound
        let bad = Address::from_values(3, vec![1, 0, 1]).unwrap();
        assert!(!bad.is_shi_admissible());
        let upper = Address::from_values(3, vec![0, 2, 0]).unwrap();
        assert!(!upper.is_shi_admissible());
        let ok = Address::from_values(3, vec![1, 2, 1]).unwrap();
        assert!(ok.is_shi_admissible());
    }
}
