//! Root ideals (Dyck paths), the `bounce` and `area'` statistics, Sommers'
//! addresses of representing alcoves, and the Pak-Stanley labeling of Shi
//! chambers.
//!
//! The root `e_i - e_j` is drawn as the unit square with top-right corner
//! `(i, j)`. An ideal is a set of squares aligned up and to the left; its lower
//! boundary is a lattice path from `(0, 0)` to `(n, n)` weakly above the
//! diagonal.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::afperm::{FinitePermutation, Window};
use crate::roots::{Address, PositiveRoot};
use crate::stats::address;
use crate::{choose2, Error, Result};

/// An upward-closed set of positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIdeal {
    n: usize,
    members: BTreeSet<PositiveRoot>,
}

impl RootIdeal {
    pub fn new(n: usize, members: impl IntoIterator<Item = PositiveRoot>) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        for r in &members {
            if r.b() > n {
                return Err(Error::BadRoot {
                    a: r.a(),
                    b: r.b(),
                    n,
                });
            }
        }
        let ideal = Self { n, members };
        let closed = ideal.members.iter().all(|r| {
            PositiveRoot::all(n)
                .filter(|s| r.le(s))
                .all(|s| ideal.members.contains(&s))
        });
        if !closed {
            return Err(Error::NotAnIdeal);
        }
        Ok(ideal)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            members: PositiveRoot::all(n).collect(),
        }
    }

    /// Upward closure of pairwise incomparable generators.
    pub fn from_minimal_roots(n: usize, gens: &[PositiveRoot]) -> Result<Self> {
        for (idx, g) in gens.iter().enumerate() {
            if g.b() > n {
                return Err(Error::BadRoot {
                    a: g.a(),
                    b: g.b(),
                    n,
                });
            }
            for h in &gens[idx + 1..] {
                if g.le(h) || h.le(g) {
                    return Err(Error::ComparableGenerators(g.to_string(), h.to_string()));
                }
            }
        }
        let members = PositiveRoot::all(n)
            .filter(|r| gens.iter().any(|g| g.le(r)))
            .collect();
        Ok(Self { n, members })
    }

    /// Builds the ideal from column thresholds: column `a` holds `e_a - e_b`
    /// for `b >= thresholds[a-1]` (`n + 1` means an empty column).
    fn from_thresholds(n: usize, thresholds: &[usize]) -> Self {
        let members = PositiveRoot::all(n)
            .filter(|r| r.b() >= thresholds[r.a() - 1])
            .collect();
        Self { n, members }
    }

    /// All ideals of the root poset of rank `n`, sorted.
    pub fn all(n: usize) -> Vec<RootIdeal> {
        fn extend(
            n: usize,
            col: usize,
            prev: usize,
            acc: &mut Vec<usize>,
            out: &mut Vec<RootIdeal>,
        ) {
            if col > n {
                out.push(RootIdeal::from_thresholds(n, acc));
                return;
            }
            // thresholds weakly increase along columns and exceed the column index
            let lo = prev.max(col + 1);
            let choices: Vec<usize> = if col == n {
                vec![n + 1]
            } else {
                (lo..=n + 1).collect()
            };
            for c in choices {
                acc.push(c);
                extend(n, col + 1, c, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, 1, 0, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, r: PositiveRoot) -> bool {
        self.members.contains(&r)
    }

    pub fn members(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Minimal members (the floors of the chamber; squares in the valleys).
    pub fn valleys(&self) -> Vec<PositiveRoot> {
        self.members
            .iter()
            .copied()
            .filter(|r| !self.members.iter().any(|s| s != r && s.le(r)))
            .collect()
    }

    /// Height of the path above column `a`: the bottom edge of the lowest
    /// ideal square in that column, or `n` when the column is empty.
    pub fn column_heights(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|a| {
                (a + 1..=self.n)
                    .find(|&b| self.contains(PositiveRoot::new_unchecked(a, b)))
                    .map_or(self.n, |b| b - 1)
            })
            .collect()
    }

    /// Haglund's bounce: from `(n, n)` go left until the path turns down, drop
    /// to the diagonal, repeat; sum the diagonal points `(i, i)` touched with
    /// `1 <= i <= n - 1`.
    pub fn bounce(&self) -> i64 {
        let heights = self.column_heights();
        let mut y = self.n;
        let mut total = 0;
        loop {
            // heights are weakly increasing, so this is how far left we travel
            let x = heights.iter().filter(|&&h| h < y).count();
            if x == 0 {
                break;
            }
            total += x as i64;
            y = x;
        }
        total
    }

    /// Number of squares strictly between the path and the diagonal.
    pub fn area(&self) -> i64 {
        choose2(self.n) - self.members.len() as i64
    }

    /// `k(a)` = the largest `r` such that `a` is a sum of `r` roots of the
    /// ideal (0 when `a` is not in the ideal).
    pub fn sommers_address(&self) -> Address {
        let n = self.n;
        let mut k = Address::zero(n);
        // sums of positive roots equal to e_a - e_b are chains a < c_1 < ... < b
        for b in 2..=n {
            for a in (1..b).rev() {
                let mut best = 0;
                for c in a + 1..=b {
                    if !self.contains(PositiveRoot::new_unchecked(a, c)) {
                        continue;
                    }
                    let rest = if c == b {
                        0
                    } else {
                        k.get(PositiveRoot::new_unchecked(c, b))
                    };
                    if c == b || rest > 0 {
                        best = best.max(rest + 1);
                    }
                }
                k.set(PositiveRoot::new_unchecked(a, b), best);
            }
        }
        k
    }

    /// `{a : k(a) >= 1}` for an address `k`.
    pub fn from_address(k: &Address) -> Self {
        Self {
            n: k.n(),
            members: k.iter().filter(|&(_, v)| v >= 1).map(|(r, _)| r).collect(),
        }
    }

    pub fn to_pairs(&self) -> Vec<[usize; 2]> {
        self.members.iter().map(|r| [r.a(), r.b()]).collect()
    }
}

/// A Dyck path labeled by a permutation whose non-inversions include every
/// valley of the path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPath {
    w: FinitePermutation,
    ideal: RootIdeal,
}

impl LabeledPath {
    pub fn new(w: FinitePermutation, ideal: RootIdeal) -> Result<Self> {
        if w.n() != ideal.n() {
            return Err(Error::RankMismatch {
                left: w.n(),
                right: ideal.n(),
            });
        }
        if let Some(v) = ideal
            .valleys()
            .into_iter()
            .find(|v| w.is_inversion(v.a(), v.b()))
        {
            return Err(Error::ValleyViolation(v.to_string()));
        }
        Ok(Self { w, ideal })
    }

    pub fn w(&self) -> &FinitePermutation {
        &self.w
    }

    pub fn ideal(&self) -> &RootIdeal {
        &self.ideal
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Every valid labeled path of rank `n`, sorted.
    pub fn all(n: usize) -> Vec<LabeledPath> {
        let ideals = RootIdeal::all(n);
        let perms = FinitePermutation::all(n);
        let mut out: Vec<_> = perms
            .iter()
            .flat_map(|w| {
                ideals
                    .iter()
                    .filter_map(|i| LabeledPath::new(w.clone(), i.clone()).ok())
            })
            .collect();
        out.sort();
        out
    }

    /// ASCII rendering, rows top (`j = n`) to bottom; `×` marks an inversion
    /// `(i, j)` of `w`, `o` a non-inversion, and `|` the path between the
    /// ideal squares (left) and those below the path (right).
    pub fn render(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for j in (2..=n).rev() {
            let _ = write!(out, "{j:>3} ");
            let mut wall = false;
            for i in 1..j {
                let inside = self.ideal.contains(PositiveRoot::new_unchecked(i, j));
                if !inside && !wall {
                    out.push('|');
                    wall = true;
                } else {
                    out.push(' ');
                }
                out.push(if self.w.is_inversion(i, j) { '×' } else { 'o' });
            }
            if !wall {
                out.push('|');
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct LabeledPathJson {
    w: Vec<usize>,
    ideal: Vec<[usize; 2]>,
}

impl Serialize for LabeledPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LabeledPathJson {
            w: self.w.images().to_vec(),
            ideal: self.ideal.to_pairs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = LabeledPathJson::deserialize(d)?;
        let n = raw.w.len();
        let w = FinitePermutation::new(raw.w).map_err(D::Error::custom)?;
        let roots = raw
            .ideal
            .iter()
            .map(|[a, b]| PositiveRoot::new(*a, *b, n))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let ideal = RootIdeal::new(n, roots).map_err(D::Error::custom)?;
        LabeledPath::new(w, ideal).map_err(D::Error::custom)
    }
}

/// Haglund-Loehr `area'`: non-inversions `(i, j)` of `w` whose square lies
/// below the path.
pub fn area_prime(p: &LabeledPath) -> i64 {
    let n = p.n();
    PositiveRoot::all(n)
        .filter(|r| !p.w.is_inversion(r.a(), r.b()) && !p.ideal.contains(*r))
        .count() as i64
}

/// Walks from the fundamental alcove to the alcove with address `target`,
/// only visiting alcoves whose address lies between 0 and `target`
/// rootwise. Every such alcove is separated from the fundamental alcove by a
/// subset of the hyperplanes separating the target, so any step that grows
/// the length and stays in that box moves closer to the target.
pub fn realize_address(target: &Address) -> Result<Window> {
    if !target.is_shi_admissible() {
        return Err(Error::AddressNotRealized);
    }
    let n = target.n();
    let inside = |k: &Address| {
        k.iter().all(|(r, v)| {
            let t = target.get(r);
            t.min(0) <= v && v <= t.max(0)
        })
    };
    let mut cur = Window::identity(n);
    let mut k = address(&cur);
    while &k != target {
        let len = cur.length();
        let next = cur
            .neighbors()
            .map(|nb| {
                let kb = address(&nb);
                (nb, kb)
            })
            .find(|(nb, kb)| nb.length() > len && inside(kb));
        match next {
            Some((nb, kb)) => {
                cur = nb;
                k = kb;
            }
            None => return Err(Error::AddressNotRealized),
        }
    }
    Ok(cur)
}

/// The Pak-Stanley pair of a Shi representing alcove.
///
/// With `w = w^I . w_I`, the ideal is `{a : k_{w^I}(a) >= 1}` and the label
/// is `w_I^-1`, i.e. `label(i)` is the position of the `i`-th smallest window
/// entry.
pub fn to_labeled_path(w: &Window) -> Result<LabeledPath> {
    let (sorter, rep) = w.parabolic_decompose();
    let ideal = RootIdeal::from_address(&address(&rep));
    let path = LabeledPath::new(sorter.inverse(), ideal)
        .map_err(|_| Error::NotRepresentingAlcove(w.to_string()))?;
    if &from_labeled_path(&path)? != w {
        return Err(Error::NotRepresentingAlcove(w.to_string()));
    }
    Ok(path)
}

/// Representing alcove of the Shi chamber labeled by `p`: the positive
/// alcove with address `k_I`, composed with the label.
pub fn from_labeled_path(p: &LabeledPath) -> Result<Window> {
    let positive = realize_address(&p.ideal.sommers_address())?;
    positive.compose(&p.w.inverse().lift())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(a: usize, b: usize, n: usize) -> PositiveRoot {
        PositiveRoot::new(a, b, n).unwrap()
    }

    fn rank_nine_ideal() -> RootIdeal {
        let gens = [root(1, 4, 9), root(2, 6, 9), root(6, 7, 9), root(7, 9, 9)];
        RootIdeal::from_minimal_roots(9, &gens).unwrap()
    }

    fn perm(v: &[usize]) -> FinitePermutation {
        FinitePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let ideal = rank_nine_ideal();
        let mut valleys = ideal.valleys();
        valleys.sort();
        assert_eq!(
            valleys,
            vec![root(1, 4, 9), root(2, 6, 9), root(6, 7, 9), root(7, 9, 9)]
        );
        assert!(RootIdeal::from_minimal_roots(3, &[]).unwrap().is_empty());
        let i = RootIdeal::from_minimal_roots(3, &[root(1, 2, 3)]).unwrap();
        assert_eq!(i.to_pairs(), vec![[1, 2], [1, 3]]);
        assert!(matches!(
            RootIdeal::from_minimal_roots(3, &[root(1, 2, 3), root(1, 3, 3)]),
            Err(Error::ComparableGenerators(..))
        ));
        assert_eq!(RootIdeal::new(3, [root(1, 2, 3)]), Err(Error::NotAnIdeal));
    }

    #[test]
    fn valleys_regenerate() {
        assert_eq!(
            RootIdeal::full(3).valleys(),
            vec![root(1, 2, 3), root(2, 3, 3)]
        );
        assert!(RootIdeal::empty(3).valleys().is_empty());
        for ideal in RootIdeal::all(5) {
            assert_eq!(
                RootIdeal::from_minimal_roots(5, &ideal.valleys()).unwrap(),
                ideal
            );
        }
    }

    #[test]
    fn ideal_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate().skip(1) {
            assert_eq!(RootIdeal::all(n).len(), c, "n = {n}");
        }
    }

    #[test]
    fn bounce_examples() {
        assert_eq!(rank_nine_ideal().bounce(), 15);
        for n in 2..7 {
            assert_eq!(RootIdeal::empty(n).bounce(), 0);
            assert_eq!(RootIdeal::full(n).bounce(), choose2(n));
        }
    }

    #[test]
    fn sommers_examples() {
        let k = rank_nine_ideal().sommers_address();
        let top: Vec<i64> = (1..9).map(|i| k.get(root(i, 9, 9))).collect();
        assert_eq!(top, vec![3, 3, 2, 2, 2, 2, 1, 0]);
        assert_eq!(top.iter().sum::<i64>(), 15);
        assert_eq!(RootIdeal::empty(4).sommers_address(), Address::zero(4));
        let full = RootIdeal::full(5).sommers_address();
        for r in PositiveRoot::all(5) {
            assert_eq!(full.get(r), r.height() as i64);
        }
    }

    #[test]
    fn area_prime_examples() {
        let i = RootIdeal::from_minimal_roots(3, &[root(1, 2, 3)]).unwrap();
        let p = LabeledPath::new(perm(&[1, 3, 2]), i).unwrap();
        assert_eq!(area_prime(&p), 0);
        for ideal in RootIdeal::all(4) {
            let p = LabeledPath::new(FinitePermutation::identity(4), ideal.clone()).unwrap();
            assert_eq!(area_prime(&p), ideal.area());
        }
        let p = LabeledPath::new(perm(&[2, 3, 1]), RootIdeal::full(3));
        // e1-e2 is a valley and a non-inversion, but e2-e3 is an inversion
        assert!(matches!(p, Err(Error::ValleyViolation(_))));
        let p = LabeledPath::new(perm(&[1, 2, 3]), RootIdeal::full(3)).unwrap();
        assert_eq!(area_prime(&p), 0);
    }

    #[test]
    fn labeled_path_round_trip_examples() {
        let x = Window::new(vec![-1, 4, 3]).unwrap();
        let p = to_labeled_path(&x).unwrap();
        assert_eq!(p.w(), &perm(&[1, 3, 2]));
        assert_eq!(p.ideal().to_pairs(), vec![[1, 2], [1, 3]]);
        assert_eq!(from_labeled_path(&p).unwrap(), x);

        let id = Window::identity(3);
        let p = to_labeled_path(&id).unwrap();
        assert_eq!(p.w(), &FinitePermutation::identity(3));
        assert!(p.ideal().is_empty());
        assert_eq!(from_labeled_path(&p).unwrap(), id);

        let x = Window::new(vec![1, 5, 0]).unwrap();
        let p = to_labeled_path(&x).unwrap();
        assert_eq!(p.w(), &perm(&[3, 1, 2]));
        assert_eq!(p.ideal().to_pairs(), vec![[1, 3], [2, 3]]);

        let bad = RootIdeal::from_minimal_roots(3, &[root(2, 3, 3)]).unwrap();
        assert!(matches!(
            LabeledPath::new(perm(&[1, 3, 2]), bad),
            Err(Error::ValleyViolation(_))
        ));
    }

    #[test]
    fn non_representing_alcove_rejected() {
        // [-2,2,6] has address (1,2,1) and is minimal in the far dominant
        // chamber; its neighbor across e1-e3 = 3 is not
        let x = Window::new(vec![-2, 2, 6]).unwrap();
        assert!(to_labeled_path(&x).is_ok());
        let beyond = x
            .neighbors()
            .find(|y| address(y).values() == [1, 3, 1])
            .expect("neighbor across e1-e3=3");
        assert!(matches!(
            to_labeled_path(&beyond),
            Err(Error::NotRepresentingAlcove(_))
        ));
    }

    #[test]
    fn json_shape() {
        let x = Window::new(vec![1, 5, 0]).unwrap();
        let p = to_labeled_path(&x).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"w":[3,1,2],"ideal":[[1,3],[2,3]]}"#);
        let back: LabeledPath = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn render_marks_path() {
        let x = Window::new(vec![1, 5, 0]).unwrap();
        let art = to_labeled_path(&x).unwrap().render();
        assert_eq!(art, "  3  × o|\n  2 |×\n");
    }
}
