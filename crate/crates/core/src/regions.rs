//! Alcoves of the simplices `D^p(n)` and the chambers of `Shi^m(n)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::afperm::{quo, rem, Window};
use crate::fm::{self, Inequality};
use crate::roots::{Address, PositiveRoot};
use crate::stats::address;
use crate::{Error, Result};

/// The simplex `D^p(n)` for `p = a n + b` coprime to `n`, `1 <= b <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimplexSpec {
    n: usize,
    p: u64,
    a: i64,
    b: usize,
}

impl SimplexSpec {
    pub fn new(n: usize, p: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadArgs(format!(
                "simplex rank must be at least 2, got {n}"
            )));
        }
        if p == 0 || p.gcd(&(n as u64)) != 1 {
            return Err(Error::NotCoprime { p, n });
        }
        let (pi, ni) = (p as i64, n as i64);
        Ok(Self {
            n,
            p,
            a: quo(pi, ni),
            b: rem(pi, ni) as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Expected number of alcoves, `p^(n-1)`.
    pub fn alcove_count(&self) -> u128 {
        (self.p as u128).pow(self.n as u32 - 1)
    }

    fn contains_address(&self, k: &Address) -> bool {
        k.iter().all(|(root, v)| {
            let h = root.height();
            (h != self.n - self.b || v <= self.a) && (h != self.b || v >= -self.a)
        })
    }
}

impl fmt::Display for SimplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}({})", self.p, self.n)
    }
}

pub fn simplex_contains(s: &SimplexSpec, w: &Window) -> bool {
    w.n() == s.n && s.contains_address(&address(w))
}

/// Connected flood fill over wall-adjacent alcoves, starting at the
/// fundamental alcove and keeping those whose address passes `keep`.
fn flood<F>(n: usize, keep: F) -> Vec<(Window, Address)>
where
    F: Fn(&Address) -> bool + Sync,
{
    let start = Window::identity(n);
    let k0 = address(&start);
    if !keep(&k0) {
        return Vec::new();
    }
    let mut seen: HashSet<Window> = HashSet::from([start.clone()]);
    let mut out = vec![(start.clone(), k0)];
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let found: Vec<(Window, Address)> = frontier
            .par_iter()
            .flat_map_iter(|w| w.neighbors().collect::<Vec<_>>())
            .filter(|y| !seen.contains(y))
            .filter_map(|y| {
                let k = address(&y);
                keep(&k).then_some((y, k))
            })
            .collect();
        frontier = Vec::new();
        for (y, k) in found {
            if seen.insert(y.clone()) {
                frontier.push(y.clone());
                out.push((y, k));
            }
        }
    }
    out
}

/// All alcoves of `D^p(n)`, sorted by window.
pub fn enumerate_simplex(s: &SimplexSpec) -> Vec<Window> {
    let mut ws: Vec<Window> = flood(s.n, |k| s.contains_address(k))
        .into_iter()
        .map(|(w, _)| w)
        .collect();
    ws.sort();
    ws
}

/// Keeps the windows whose inverse is increasing, i.e. whose inverse alcove
/// lies in the dominant chamber.
pub fn dominant_inverse_filter(ws: &[Window]) -> Vec<Window> {
    ws.iter()
        .filter(|w| w.invert().values().windows(2).all(|p| p[0] < p[1]))
        .cloned()
        .collect()
}

/// The clamp of an address to `[-m, m]`, which names a chamber of `Shi^m(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberDescriptor {
    pub m: u32,
    pub clamp: Address,
}

impl ChamberDescriptor {
    fn of_address(k: &Address, m: u32) -> Self {
        let mi = m as i64;
        let clamp = Address::from_values(
            k.n(),
            k.values().iter().map(|v| (*v).clamp(-mi, mi)).collect(),
        )
        .expect("same rank");
        Self { m, clamp }
    }
}

impl fmt::Display for ChamberDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.clamp.values().iter().map(|v| v.to_string()).collect();
        write!(f, "m{}[{}]", self.m, vals.join(","))
    }
}

pub fn chamber_descriptor(w: &Window, m: u32) -> ChamberDescriptor {
    assert!(m >= 1, "chamber descriptors need m >= 1");
    ChamberDescriptor::of_address(&address(w), m)
}

/// Decides boundedness (modulo the line `x_1 = ... = x_n`) from the
/// recession cone of the chamber.
pub fn is_bounded_chamber(d: &ChamberDescriptor) -> bool {
    let n = d.clamp.n();
    if n < 2 {
        return true;
    }
    let m = d.m as i64;
    // coordinates x_1..x_{n-1}, with x_n = 0
    let dim = n - 1;
    let mut rows = Vec::new();
    for (root, c) in d.clamp.iter() {
        let mut coeffs = vec![0i128; dim];
        coeffs[root.a() - 1] += 1;
        if root.b() < n {
            coeffs[root.b() - 1] -= 1;
        }
        let neg: Vec<i128> = coeffs.iter().map(|x| -x).collect();
        if c >= m {
            rows.push(Inequality::new(coeffs, 0));
        } else if c <= -m {
            rows.push(Inequality::new(neg, 0));
        } else {
            rows.push(Inequality::new(coeffs, 0));
            rows.push(Inequality::new(neg, 0));
        }
    }
    fm::cone_is_pointed_zero(dim, &rows)
}

/// One chamber of `Shi^m(n)` found by the census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberRecord {
    pub descriptor: ChamberDescriptor,
    pub min: Window,
    pub bounded: bool,
    /// Maximum-length alcove, bounded chambers only.
    pub max: Option<Window>,
    /// Number of alcoves, bounded chambers only.
    pub alcove_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Group {
    min_len: usize,
    mins: Vec<Window>,
    max_len: usize,
    maxs: Vec<Window>,
    count: usize,
}

impl Group {
    fn new(w: Window, len: usize) -> Self {
        Self {
            min_len: len,
            mins: vec![w.clone()],
            max_len: len,
            maxs: vec![w],
            count: 1,
        }
    }

    fn add(&mut self, w: Window, len: usize) {
        self.count += 1;
        match len.cmp(&self.min_len) {
            std::cmp::Ordering::Less => {
                self.min_len = len;
                self.mins = vec![w.clone()];
            }
            std::cmp::Ordering::Equal => self.mins.push(w.clone()),
            std::cmp::Ordering::Greater => {}
        }
        match len.cmp(&self.max_len) {
            std::cmp::Ordering::Greater => {
                self.max_len = len;
                self.maxs = vec![w];
            }
            std::cmp::Ordering::Equal => self.maxs.push(w),
            std::cmp::Ordering::Less => {}
        }
    }

    fn normalize(&mut self) {
        self.mins.sort();
        self.maxs.sort();
    }
}

/// Alcoves with `|k(a)| <= c` for every positive root, grouped by descriptor.
fn groups_in_box(n: usize, m: u32, c: i64) -> BTreeMap<ChamberDescriptor, Group> {
    let alcoves = flood(n, |k| k.iter().all(|(_, v)| v.abs() <= c));
    let mut groups: BTreeMap<ChamberDescriptor, Group> = BTreeMap::new();
    for (w, k) in alcoves {
        let len = w.length();
        let d = ChamberDescriptor::of_address(&k, m);
        match groups.get_mut(&d) {
            Some(g) => g.add(w, len),
            None => {
                groups.insert(d, Group::new(w, len));
            }
        }
    }
    for g in groups.values_mut() {
        g.normalize();
    }
    groups
}

/// Full census of the chambers of `Shi^m(n)`, sorted by minimal alcove.
///
/// Alcoves are collected in boxes `|k(a)| <= c` for growing `c`,
/// starting at `c = m + 1`, until two consecutive boxes agree on every
/// chamber's minimal alcoves and on every bounded chamber's full alcove set.
pub fn census(n: usize, m: u32) -> Result<Vec<ChamberRecord>> {
    if m == 0 {
        return Err(Error::BadArgs("m must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut bounded: HashMap<ChamberDescriptor, bool> = HashMap::new();
    let mut c = m as i64 + 1;
    let mut prev = groups_in_box(n, m, c);
    loop {
        c += 1;
        let next = groups_in_box(n, m, c);
        let stable = prev.len() == next.len()
            && prev.iter().zip(&next).all(|((d1, g1), (d2, g2))| {
                let is_bounded = *bounded
                    .entry(d1.clone())
                    .or_insert_with(|| is_bounded_chamber(d1));
                d1 == d2 && g1.mins == g2.mins && (!is_bounded || g1 == g2)
            });
        prev = next;
        if stable {
            break;
        }
    }
    let mut records = Vec::with_capacity(prev.len());
    for (d, g) in prev {
        if g.mins.len() > 1 {
            return Err(Error::NonUniqueMinimum(d.to_string()));
        }
        let is_bounded = *bounded
            .entry(d.clone())
            .or_insert_with(|| is_bounded_chamber(&d));
        let (max, alcove_count) = if is_bounded {
            if g.maxs.len() > 1 {
                return Err(Error::NonUniqueMaximum(d.to_string()));
            }
            (Some(g.maxs[0].clone()), Some(g.count))
        } else {
            (None, None)
        };
        records.push(ChamberRecord {
            descriptor: d,
            min: g.mins[0].clone(),
            bounded: is_bounded,
            max,
            alcove_count,
        });
    }
    records.sort_by(|x, y| x.min.cmp(&y.min));
    Ok(records)
}

/// Each chamber of `Shi^m(n)` with its unique minimum-length alcove.
pub fn enumerate_chambers(n: usize, m: u32) -> Result<Vec<(ChamberDescriptor, Window)>> {
    Ok(census(n, m)?
        .into_iter()
        .map(|r| (r.descriptor, r.min))
        .collect())
}

/// The maximum-length alcove of every bounded chamber, sorted.
pub fn max_alcove_of_bounded(n: usize, m: u32) -> Result<Vec<Window>> {
    let mut out: Vec<Window> = census(n, m)?.into_iter().filter_map(|r| r.max).collect();
    out.sort();
    Ok(out)
}

/// Shi^m hyperplanes separating two alcoves, given their addresses.
pub fn separating_levels(k1: &Address, k2: &Address, m: u32) -> Vec<(PositiveRoot, i64)> {
    let mi = m as i64;
    let mut out = Vec::new();
    for ((root, x), (_, y)) in k1.iter().zip(k2.iter()) {
        let (lo, hi) = (x.min(y), x.max(y));
        // level L lies between the alcoves iff lo < L <= hi
        for level in (lo + 1).max(-mi + 1)..=hi.min(mi) {
            out.push((root, level));
        }
    }
    out
}
