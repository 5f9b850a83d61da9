//! Integer hyperplane arrangements in `R^n` and their characteristic
//! polynomials by finite-field point counting.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::qt::QPoly;
use crate::{Error, Result};

/// The hyperplane `x_i - x_j = level`, `1 <= i < j <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hyperplane {
    pub i: usize,
    pub j: usize,
    pub level: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cox,
    Shi,
    ShiM(u32),
    Ish,
    /// Levels `-m..=m` for every root.
    AffTruncated(u32),
}

impl Family {
    /// Parses `cox`, `shi`, `ish`, or `shi_m` / `aff-truncated` with the given `m`.
    pub fn parse(name: &str, m: Option<u32>) -> Result<Self> {
        let need_m = |m: Option<u32>| match m {
            Some(m) if m >= 1 => Ok(m),
            _ => Err(Error::BadArgs(format!("family {name} needs m >= 1"))),
        };
        match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "cox" | "coxeter" => Ok(Family::Cox),
            "shi" => Ok(Family::Shi),
            "ish" => Ok(Family::Ish),
            "shi_m" | "shim" => Ok(Family::ShiM(need_m(m)?)),
            "aff_truncated" => Ok(Family::AffTruncated(need_m(m)?)),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cox => "cox",
            Family::Shi => "shi",
            Family::ShiM(_) => "shi_m",
            Family::Ish => "ish",
            Family::AffTruncated(_) => "aff-truncated",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::parse(s, None)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::ShiM(m) | Family::AffTruncated(m) => write!(f, "{}({m})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub n: usize,
    pub family: Family,
    /// Sorted, without repeats.
    pub hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn build(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadArgs(format!("arrangements need n >= 2, got {n}")));
        }
        let mut hyperplanes = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let levels: Vec<i64> = match family {
                    Family::Cox => vec![0],
                    Family::Shi => vec![0, 1],
                    Family::ShiM(m) => (-(m as i64) + 1..=m as i64).collect(),
                    Family::AffTruncated(m) => (-(m as i64)..=m as i64).collect(),
                    Family::Ish if j == n => (0..=(n - i) as i64).collect(),
                    Family::Ish => vec![0],
                };
                hyperplanes.extend(levels.into_iter().map(|level| Hyperplane { i, j, level }));
            }
        }
        hyperplanes.sort();
        Ok(Self {
            n,
            family,
            hyperplanes,
        })
    }

    pub fn by_name(name: &str, n: usize, m: Option<u32>) -> Result<Self> {
        Self::build(Family::parse(name, m)?, n)
    }

    pub fn max_abs_level(&self) -> i64 {
        self.hyperplanes
            .iter()
            .map(|h| h.level.abs())
            .max()
            .unwrap_or(0)
    }

    /// Points of `F_p^n` on none of the hyperplanes reduced mod `p`.
    pub fn count_complement(&self, p: u64) -> u128 {
        let n = self.n;
        // forbidden[j][i] lists residues of x_i - x_j that are excluded, i < j
        let mut forbidden: Vec<Vec<Vec<u64>>> = vec![vec![Vec::new(); n]; n];
        for h in &self.hyperplanes {
            forbidden[h.j - 1][h.i - 1].push(h.level.rem_euclid(p as i64) as u64);
        }
        let mut mask = vec![vec![vec![false; p as usize]; n]; n];
        for j in 0..n {
            for i in 0..j {
                for &r in &forbidden[j][i] {
                    mask[j][i][r as usize] = true;
                }
            }
        }
        (0..p)
            .into_par_iter()
            .map(|x0| {
                let mut x = vec![0u64; n];
                x[0] = x0;
                count_from(&mask, &mut x, 1, p)
            })
            .sum()
    }
}

/// Depth-first count over coordinates `k..n`, checking each new coordinate
/// against all earlier ones.
fn count_from(mask: &[Vec<Vec<bool>>], x: &mut [u64], k: usize, p: u64) -> u128 {
    if k == x.len() {
        return 1;
    }
    let mut total = 0;
    'value: for v in 0..p {
        for i in 0..k {
            let diff = (x[i] + p - v) % p;
            if mask[k][i][diff as usize] {
                continue 'value;
            }
        }
        x[k] = v;
        total += count_from(mask, x, k + 1, p);
    }
    total
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The `count` smallest primes greater than `bound`.
pub fn primes_above(bound: u64, count: usize) -> Vec<u64> {
    (bound + 1..).filter(|&p| is_prime(p)).take(count).collect()
}

/// Primes used by [`charpoly_ff`]: `n + 2` primes above `max|level| + n`,
/// one more than interpolation needs so the fit is checked.
pub fn default_primes(arr: &Arrangement) -> Vec<u64> {
    primes_above(arr.max_abs_level() as u64 + arr.n as u64, arr.n + 2)
}

/// Characteristic polynomial of `arr` in `R^n` (degree `n`).
pub fn charpoly_ff(arr: &Arrangement, budget: u128) -> Result<QPoly> {
    charpoly_ff_with_primes(arr, &default_primes(arr), budget)
}

/// Point-count interpolation at the given primes. The first `n + 1` primes
/// determine the polynomial and every remaining prime must agree with it.
pub fn charpoly_ff_with_primes(arr: &Arrangement, primes: &[u64], budget: u128) -> Result<QPoly> {
    let n = arr.n;
    if n > 5 {
        return Err(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        });
    }
    if primes.len() < n + 1 {
        return Err(Error::InsufficientPrimes(n));
    }
    let needed: u128 = primes
        .iter()
        .map(|&p| (p as u128).pow(n as u32) * arr.hyperplanes.len() as u128)
        .sum();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let counts: Vec<u128> = primes.iter().map(|&p| arr.count_complement(p)).collect();
    let xs: Vec<i64> = primes[..=n].iter().map(|&p| p as i64).collect();
    let ys: Vec<BigInt> = counts[..=n].iter().map(|&c| BigInt::from(c)).collect();
    let chi = interpolate(&xs, &ys).ok_or(Error::InsufficientPrimes(n))?;
    for (&p, &c) in primes.iter().zip(&counts).skip(n + 1) {
        if chi.eval(p as i64) != BigInt::from(c) {
            return Err(Error::InsufficientPrimes(n));
        }
    }
    Ok(chi)
}

/// Newton interpolation; `None` unless every coefficient is an integer.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Option<QPoly> {
    let k = xs.len();
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let denom = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(denom);
        }
    }
    // Horner on the Newton form: c_0 + (x - x_0)(c_1 + (x - x_1)(...))
    let mut poly: Vec<BigRational> = vec![dd[k - 1].clone()];
    for i in (0..k - 1).rev() {
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(xs[i]));
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &shift;
        }
        next[0] += &dd[i];
        poly = next;
    }
    let mut coeffs = Vec::with_capacity(poly.len());
    for c in poly {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(QPoly::new(coeffs))
}

/// `chi / q`: the polynomial of the essentialized arrangement (degree `n-1`).
pub fn quotient_view(chi: &QPoly) -> Result<QPoly> {
    chi.div_exact(&QPoly::monomial(1, 1))
}

/// `p (p - n)^(n-1)`: place `v_n` anywhere on a regular `p`-gon, then each
/// other label in one of the `p - n` positions it is allowed.
pub fn ish_cyclic_count(n: usize, p: u64) -> u128 {
    assert!(p as usize > n, "cyclic count needs p > n");
    let mut total = p as u128;
    for _ in 1..n {
        total *= (p - n as u64) as u128;
    }
    total
}

/// `((-1)^n chi(-1), (-1)^(n-1) chi(1))`: all chambers and bounded chambers.
pub fn zaslavsky_counts(chi: &QPoly, n: usize) -> (BigInt, BigInt) {
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    (sign(n) * chi.eval(-1), sign(n + 1) * chi.eval(1))
}

/// Convenience for callers that know the counts fit.
pub fn zaslavsky_counts_u128(chi: &QPoly, n: usize) -> (u128, u128) {
    let (c, b) = zaslavsky_counts(chi, n);
    (
        c.to_u128().expect("chamber count fits"),
        b.to_u128().expect("bounded count fits"),
    )
}
