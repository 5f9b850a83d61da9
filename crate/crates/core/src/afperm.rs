//! Affine permutations of type A in window notation.
//!
//! An affine permutation is a bijection `w: Z -> Z` with `w(k + n) = w(k) + n`
//! and `w(1) + ... + w(n) = n(n+1)/2`; it is determined by its window
//! `[w(1), ..., w(n)]`.
//!
//! Products are composition of functions, `(u * v)(k) = u(v(k))`. Under this
//! convention a window `w` with sorted window `w^I` and sorting permutation
//! `w_I` satisfies `w = w^I . w_I` (apply `w_I` first), and the affine
//! inversions `((i, j))` of `w` are exactly the hyperplanes separating the
//! alcove of `w` from the fundamental alcove.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::roots::PositiveRoot;
use crate::{Error, Result};

/// Remainder of `x` by `n`, taken in `{1, ..., n}`.
pub fn rem(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if r == 0 {
        n
    } else {
        r
    }
}

/// Quotient matching [`rem`]: `x = n * quo(x, n) + rem(x, n)`.
pub fn quo(x: i64, n: i64) -> i64 {
    (x - rem(x, n)) / n
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Window {
    values: Vec<i64>,
}

impl Window {
    /// Checks the window invariants and returns the affine permutation.
    pub fn validate(n: usize, values: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if values.len() != n {
            return Err(Error::BadLength {
                expected: n,
                found: values.len(),
            });
        }
        let expected = (n * (n + 1) / 2) as i64;
        let found: i64 = values.iter().sum();
        if found != expected {
            return Err(Error::BadSum { expected, found });
        }
        let ni = n as i64;
        let mut seen: Vec<Option<i64>> = vec![None; n];
        for &v in &values {
            let slot = &mut seen[(rem(v, ni) - 1) as usize];
            if let Some(first) = *slot {
                return Err(Error::BadResidues {
                    n,
                    first,
                    second: v,
                });
            }
            *slot = Some(v);
        }
        Ok(Self { values })
    }

    pub fn new(values: Vec<i64>) -> Result<Self> {
        Self::validate(values.len(), values)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().zip(1..).all(|(&v, k)| v == k)
    }

    /// `w(k)` through the periodic extension.
    pub fn apply(&self, k: i64) -> i64 {
        let n = self.n() as i64;
        self.values[(rem(k, n) - 1) as usize] + n * quo(k, n)
    }

    /// The window of `k -> self(other(k))`.
    pub fn compose(&self, other: &Window) -> Result<Window> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Window {
            values: other.values.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn invert(&self) -> Window {
        let n = self.n() as i64;
        let mut values = vec![0; self.n()];
        for (pos, &v) in (1..).zip(&self.values) {
            // w(pos) = v  =>  w(pos - n quo(v)) = rem(v)
            values[(rem(v, n) - 1) as usize] = pos - n * quo(v, n);
        }
        Window { values }
    }

    /// Affine inversions `((i, j))`, `1 <= i <= n`, `i < j`, `w(i) > w(j)`,
    /// sorted by `(i, j)`.
    pub fn inversions(&self) -> Vec<AffineTransposition> {
        let mut out = Vec::new();
        self.for_each_inversion(|i, j| out.push(AffineTransposition { i, j }));
        out.sort();
        out
    }

    pub(crate) fn for_each_inversion(&self, mut f: impl FnMut(i64, i64)) {
        let n = self.n() as i64;
        for i in 1..=n {
            let wi = self.values[(i - 1) as usize];
            for r in 1..=n {
                if r == i {
                    continue;
                }
                let diff = wi - self.values[(r - 1) as usize];
                let kmin = if r > i { 0 } else { 1 };
                // w(r + kn) = w(r) + kn < w(i)  <=>  k <= floor((diff - 1) / n)
                let kmax = (diff - 1).div_euclid(n);
                for k in kmin..=kmax {
                    f(i, r + k * n);
                }
            }
        }
    }

    /// Number of affine inversions.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0i64;
        for i in 1..=n {
            let wi = self.values[(i - 1) as usize];
            for r in 1..=n {
                if r == i {
                    continue;
                }
                let kmin = if r > i { 0 } else { 1 };
                let kmax = (wi - self.values[(r - 1) as usize] - 1).div_euclid(n);
                total += (kmax - kmin + 1).max(0);
            }
        }
        total as usize
    }

    /// `(w_I, w^I)` with `w^I` the increasing rearrangement of the window and
    /// `w(k) = w^I(w_I(k))`.
    pub fn parabolic_decompose(&self) -> (FinitePermutation, Window) {
        let mut sorted = self.values.clone();
        sorted.sort_unstable();
        let images = self
            .values
            .iter()
            .map(|v| sorted.binary_search(v).expect("value present") + 1)
            .collect();
        (FinitePermutation { images }, Window { values: sorted })
    }

    /// `(w, r)` with `values[i] = w(i) + n r(i)`.
    pub fn translation_decompose(&self) -> (FinitePermutation, RootLatticeVector) {
        let n = self.n() as i64;
        let images = self.values.iter().map(|&v| rem(v, n) as usize).collect();
        let r = self.values.iter().map(|&v| quo(v, n)).collect();
        (FinitePermutation { images }, RootLatticeVector(r))
    }

    /// `w + n r` for a finite permutation `w` and root-lattice vector `r`.
    pub fn from_translation(w: &FinitePermutation, r: &RootLatticeVector) -> Result<Window> {
        if w.n() != r.0.len() {
            return Err(Error::RankMismatch {
                left: w.n(),
                right: r.0.len(),
            });
        }
        let n = w.n() as i64;
        Window::validate(
            w.n(),
            w.images
                .iter()
                .zip(&r.0)
                .map(|(&wi, &ri)| wi as i64 + n * ri)
                .collect(),
        )
    }

    /// Position swap `w . s_i`: exchanges `w(i)` and `w(i+1)`, `1 <= i <= n`.
    pub fn right_multiply_generator(&self, i: usize) -> Window {
        let n = self.n();
        assert!((1..=n).contains(&i), "generator index out of range");
        let mut values = self.values.clone();
        if i < n {
            values.swap(i - 1, i);
        } else {
            let ni = n as i64;
            let (first, last) = (values[0], values[n - 1]);
            values[0] = last - ni;
            values[n - 1] = first + ni;
        }
        Window { values }
    }

    /// Value swap `s_i . w`. This is the alcove adjacent to `w` across its
    /// `i`-th wall.
    pub fn left_multiply_generator(&self, i: usize) -> Window {
        let n = self.n() as i64;
        let i = i as i64;
        assert!((1..=n).contains(&i), "generator index out of range");
        let up = i;
        let down = if i == n { 1 } else { i + 1 };
        let values = self
            .values
            .iter()
            .map(|&v| {
                let r = rem(v, n);
                if r == up {
                    v + 1
                } else if r == down {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        Window { values }
    }

    /// The `n` alcoves sharing a wall with this one.
    pub fn neighbors(&self) -> impl Iterator<Item = Window> + '_ {
        let walls = if self.n() >= 2 { self.n() } else { 0 };
        (1..=walls).map(move |i| self.left_multiply_generator(i))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Parses comma-separated integers such as `"1,5,0"` (brackets optional).
impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Window::new(values)
    }
}

impl TryFrom<Vec<i64>> for Window {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Window::new(values)
    }
}

impl From<Window> for Vec<i64> {
    fn from(w: Window) -> Self {
        w.values
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FinitePermutation {
    images: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in (1..).zip(&self.images) {
            images[x - 1] = i;
        }
        Self { images }
    }

    /// `(i, j)` with `i < j` is an inversion when `w(i) > w(j)`.
    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        self.apply(i) > self.apply(j)
    }

    /// Periodic extension to an affine permutation.
    pub fn lift(&self) -> Window {
        Window {
            values: self.images.iter().map(|&x| x as i64).collect(),
        }
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<FinitePermutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n)
                .rev()
                .find(|&j| cur[j] > cur[i - 1])
                .expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl TryFrom<Vec<usize>> for FinitePermutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        FinitePermutation::new(images)
    }
}

impl From<FinitePermutation> for Vec<usize> {
    fn from(w: FinitePermutation) -> Self {
        w.images
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

/// The standard representative `((i, j))`, `1 <= i <= n`, `i < j`,
/// `j` not congruent to `i` mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineTransposition {
    i: i64,
    j: i64,
}

impl AffineTransposition {
    pub fn new(i: i64, j: i64, n: usize) -> Result<Self> {
        let ni = n as i64;
        if i < 1 || i > ni || j <= i || (j - i) % ni == 0 {
            return Err(Error::BadTransposition { i, j, n });
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// `floor((j - i) / n)`: the Shi^m arrangement keeps heights `0..m`.
    pub fn height(&self, n: usize) -> i64 {
        (self.j - self.i).div_euclid(n as i64)
    }

    /// The reflecting hyperplane `e_rem(j) - e_rem(i) = quo(j)`, normalized to
    /// a positive root and a level (sign of root and level flipped together).
    pub fn hyperplane(&self, n: usize) -> (PositiveRoot, i64) {
        let ni = n as i64;
        let (rj, qj) = (rem(self.j, ni) as usize, quo(self.j, ni));
        let i = self.i as usize;
        if rj < i {
            (PositiveRoot::new_unchecked(rj, i), qj)
        } else {
            (PositiveRoot::new_unchecked(i, rj), -qj)
        }
    }
}

impl fmt::Display for AffineTransposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}))", self.i, self.j)
    }
}

/// An element of the root lattice: integer vector with zero sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootLatticeVector(pub Vec<i64>);

impl RootLatticeVector {
    pub fn new(r: Vec<i64>) -> Result<Self> {
        let s: i64 = r.iter().sum();
        if s != 0 {
            return Err(Error::BadSum {
                expected: 0,
                found: s,
            });
        }
        Ok(Self(r))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Window {
        Window::new(v.to_vec()).unwrap()
    }

    fn t(i: i64, j: i64) -> AffineTransposition {
        AffineTransposition::new(i, j, 3).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Window::validate(3, vec![1, 5, 0]).is_ok());
        assert!(Window::validate(3, vec![1, 2, 3]).is_ok());
        assert_eq!(
            Window::validate(3, vec![1, 4, 0]),
            Err(Error::BadSum {
                expected: 6,
                found: 5
            })
        );
        assert!(matches!(
            Window::validate(3, vec![1, 4, 1]),
            Err(Error::BadResidues { .. })
        ));
        assert!(matches!(
            Window::validate(3, vec![1, 5]),
            Err(Error::BadLength { .. })
        ));
        assert_eq!(Window::validate(0, vec![]), Err(Error::ZeroRank));
    }

    #[test]
    fn apply_periodic() {
        let x = w(&[1, 5, 0]);
        assert_eq!(x.apply(2), 5);
        assert_eq!(x.apply(4), 4);
        assert_eq!(x.apply(0), -3);
        assert_eq!(x.apply(-2), -2);
    }

    #[test]
    fn compose_examples() {
        let x = w(&[1, 5, 0]);
        assert_eq!(Window::identity(3).compose(&x).unwrap(), x);
        assert!(x.compose(&x.invert()).unwrap().is_identity());
        // [-1,4,3] = [-1,3,4] . [1,3,2]
        let u = w(&[-1, 3, 4]);
        let v = FinitePermutation::new(vec![1, 3, 2]).unwrap().lift();
        assert_eq!(u.compose(&v).unwrap(), w(&[-1, 4, 3]));
        assert_eq!(
            u.compose(&Window::identity(4)),
            Err(Error::RankMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[-2, 2, 6]).invert(), w(&[4, 2, 0]));
        assert_eq!(Window::identity(5).invert(), Window::identity(5));
        assert_eq!(w(&[1, 5, 0]).invert(), w(&[1, -1, 6]));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(
            w(&[1, 5, 0]).inversions(),
            vec![t(1, 3), t(2, 3), t(2, 4), t(2, 6)]
        );
        assert_eq!(w(&[1, 5, 0]).length(), 4);
        assert!(Window::identity(4).inversions().is_empty());
        assert_eq!(w(&[0, 2, 4]).inversions(), vec![t(3, 4)]);
    }

    #[test]
    fn parabolic_examples() {
        let (wi, rep) = w(&[-1, 4, 3]).parabolic_decompose();
        assert_eq!(wi.images(), &[1, 3, 2]);
        assert_eq!(rep, w(&[-1, 3, 4]));

        let (wi, rep) = Window::identity(4).parabolic_decompose();
        assert_eq!(wi, FinitePermutation::identity(4));
        assert!(rep.is_identity());

        let x = w(&[1, 5, 0]);
        let (wi, rep) = x.parabolic_decompose();
        assert_eq!(wi.images(), &[2, 3, 1]);
        assert_eq!(rep, w(&[0, 1, 5]));
        assert_eq!(rep.compose(&wi.lift()).unwrap(), x);
    }

    #[test]
    fn translation_examples() {
        let (p, r) = w(&[-2, 2, 6]).translation_decompose();
        assert_eq!(p, FinitePermutation::identity(3));
        assert_eq!(r.0, vec![-1, 0, 1]);
        let (p, r) = Window::identity(3).translation_decompose();
        assert_eq!(p, FinitePermutation::identity(3));
        assert_eq!(r, RootLatticeVector::zero(3));
        let (p, r) = w(&[4, 2, 0]).translation_decompose();
        assert_eq!(p, FinitePermutation::identity(3));
        assert_eq!(r.0, vec![1, 0, -1]);
        assert_eq!(Window::from_translation(&p, &r).unwrap(), w(&[4, 2, 0]));
    }

    #[test]
    fn hyperplane_dictionary() {
        let root = |a, b| PositiveRoot::new(a, b, 3).unwrap();
        assert_eq!(t(3, 4).hyperplane(3), (root(1, 3), 1));
        assert_eq!(t(1, 2).hyperplane(3), (root(1, 2), 0));
        assert_eq!(t(2, 3).hyperplane(3), (root(2, 3), 0));
        assert_eq!(t(2, 6).hyperplane(3), (root(2, 3), -1));
        assert!(AffineTransposition::new(1, 4, 3).is_err());
        assert!(AffineTransposition::new(4, 5, 3).is_err());
    }

    #[test]
    fn generators() {
        let id = Window::identity(3);
        assert_eq!(id.right_multiply_generator(3), w(&[0, 2, 4]));
        assert_eq!(id.left_multiply_generator(3), w(&[0, 2, 4]));
        assert_eq!(id.left_multiply_generator(1), w(&[2, 1, 3]));
        let x = w(&[1, 5, 0]);
        for i in 1..=3 {
            let y = x.left_multiply_generator(i);
            assert_eq!(y.left_multiply_generator(i), x);
            assert_eq!((y.length() as i64 - x.length() as i64).abs(), 1);
        }
    }

    #[test]
    fn parse_window() {
        assert_eq!("1,5,0".parse::<Window>().unwrap(), w(&[1, 5, 0]));
        assert_eq!(" [ -1, 4, 3 ] ".parse::<Window>().unwrap(), w(&[-1, 4, 3]));
        assert!("1,x,0".parse::<Window>().is_err());
        assert_eq!(w(&[-1, 4, 3]).to_string(), "[-1,4,3]");
    }

    #[test]
    fn all_permutations() {
        let perms = FinitePermutation::all(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(FinitePermutation::all(1).len(), 1);
    }
}
