//! Exact integer polynomials in `q` and in `(q, t)`, q-analogues, and the
//! generating functions of alcove sets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::afperm::Window;
use crate::stats::{ish_inv, shi_m};
use crate::{Error, Result};

/// Integer polynomial in `q`, coefficients in ascending degree, no trailing
/// zeros (the zero polynomial has no coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Quotient of an exact division; errors if a remainder is left.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let dd = divisor.degree().ok_or(Error::InexactDivision)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

fn term(c: &BigInt, power: String, first: bool) -> String {
    let mut s = String::new();
    if c.is_negative() {
        s.push('-');
    } else if !first {
        s.push('+');
    }
    let abs = c.abs();
    if power.is_empty() || !abs.is_one() {
        s.push_str(&abs.to_string());
    }
    s.push_str(&power);
    s
}

/// Ascending, compact: `10+5q+q^2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{d}"),
            };
            f.write_str(&term(c, power, first))?;
            first = false;
        }
        Ok(())
    }
}

/// A JSON integer when it fits in 64 bits, a decimal string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(c.to_string()),
        }
    }

    fn into_big<E: serde::de::Error>(self) -> std::result::Result<BigInt, E> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(v)),
            JsonInt::Big(s) => s
                .parse()
                .map_err(|_| E::custom(format!("bad integer {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyJson {
    coeffs: Vec<JsonInt>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyJson {
            coeffs: self.coeffs.iter().map(JsonInt::from_big).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(JsonInt::into_big)
            .collect::<std::result::Result<_, _>>()?;
        Ok(QPoly::new(coeffs))
    }
}

/// Sparse integer polynomial in `q` and `t`, keyed by `(q-exponent, t-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: impl Into<BigInt>) {
        let c = c.into();
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, q: i64, t: i64) -> BigInt {
        let (q, t) = (BigInt::from(q), BigInt::from(t));
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * q.pow(a) * t.pow(b))
            .sum()
    }

    /// `q <-> t`.
    pub fn swapped(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    pub fn max_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Coefficient matrix with rows indexed by `offset - (t-exponent)` and
    /// columns by q-exponent, both ascending from 0.
    pub fn matrix(&self, offset: u32) -> Result<Vec<Vec<BigInt>>> {
        let cols = self.max_q() as usize + 1;
        let mut rows = vec![vec![BigInt::zero(); cols]; offset as usize + 1];
        for (&(a, b), c) in &self.terms {
            let r = offset
                .checked_sub(b)
                .ok_or_else(|| Error::NegativeExponent(format!("t^{b} exceeds offset {offset}")))?;
            rows[r as usize][a as usize] = c.clone();
        }
        Ok(rows)
    }
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let mut power = String::new();
            match a {
                0 => {}
                1 => power.push('q'),
                _ => power.push_str(&format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => power.push('t'),
                _ => power.push_str(&format!("t^{b}")),
            }
            f.write_str(&term(c, power, idx == 0))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QTPolyJson {
    terms: Vec<(u32, u32, JsonInt)>,
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QTPolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| (a, b, JsonInt::from_big(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QTPolyJson::deserialize(d)?;
        let mut out = QTPoly::zero();
        for (a, b, c) in raw.terms {
            let c = c.into_big::<D::Error>()?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient stored"));
            }
            out.add_term(a, b, c);
        }
        Ok(out)
    }
}

/// `[a]_q = 1 + q + ... + q^(a-1)`.
pub fn q_int(a: usize) -> QPoly {
    QPoly::new(vec![BigInt::one(); a])
}

/// `[a]_q! = [1]_q [2]_q ... [a]_q`.
pub fn q_fact(a: usize) -> QPoly {
    (1..=a).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// Gaussian binomial via `[a, b] = [a-1, b-1] + q^b [a-1, b]`.
pub fn q_binom(a: usize, b: usize) -> Result<QPoly> {
    if b > a {
        return Err(Error::BadArgs(format!(
            "q_binom needs b <= a, got ({a}, {b})"
        )));
    }
    // row[k] holds [r, k] for the current r
    let mut row = vec![QPoly::one()];
    for r in 1..=a {
        let mut next = Vec::with_capacity(r + 1);
        for k in 0..=r.min(b) {
            let left = if k > 0 {
                row[k - 1].clone()
            } else {
                QPoly::zero()
            };
            let right = if k < row.len() && k < r {
                row[k].shift(k)
            } else {
                QPoly::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[b].clone())
}

/// `(1/[n]_q) [2n, n-1]_q`.
pub fn q_catalan(n: usize) -> Result<QPoly> {
    q_fuss_catalan(n, 1)
}

/// `(1/[n]_q) [(m+1)n, n-1]_q`.
pub fn q_fuss_catalan(n: usize, m: usize) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::BadArgs("n must be at least 1".into()));
    }
    q_binom((m + 1) * n, n - 1)?.div_exact(&q_int(n))
}

/// `(1/[p+n]_q) [p+n, n]_q` for `p` coprime to `n`.
pub fn q_rational(n: usize, p: usize) -> Result<QPoly> {
    if n == 0 || num_integer::gcd(n, p) != 1 {
        return Err(Error::NotCoprime { p: p as u64, n });
    }
    q_binom(p + n, n)?.div_exact(&q_int(p + n))
}

/// `(1/[n]_q) [(m+1)n - 2, n-1]_q`.
pub fn q_negative_fuss_catalan(n: usize, m: usize) -> Result<QPoly> {
    if n == 0 || (m + 1) * n < 2 {
        return Err(Error::BadArgs(format!(
            "no negative Fuss-Catalan number for n = {n}, m = {m}"
        )));
    }
    q_binom((m + 1) * n - 2, n - 1)?.div_exact(&q_int(n))
}

/// Which simplex a generating function is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// `D^(mn+1)(n)`, t-offset `m C(n,2)`.
    Positive,
    /// `D^(mn-1)(n)`, t-offset `(mn-2)(n-1)/2`.
    Negative,
}

impl Sign {
    pub fn t_offset(&self, n: usize, m: u32) -> i64 {
        let (n, m) = (n as i64, m as i64);
        match self {
            Sign::Positive => m * n * (n - 1) / 2,
            Sign::Negative => (m * n - 2) * (n - 1) / 2,
        }
    }

    /// `p` of the matching simplex.
    pub fn p(&self, n: usize, m: u32) -> i64 {
        let base = m as i64 * n as i64;
        match self {
            Sign::Positive => base + 1,
            Sign::Negative => base - 1,
        }
    }
}

/// `sum over w of q^(ish(w^-1)) t^(offset - shi^m(w))`.
pub fn genfun(ws: &[Window], m: u32, sign: Sign) -> Result<QTPoly> {
    let mut out = QTPoly::zero();
    for w in ws {
        let offset = sign.t_offset(w.n(), m);
        let a = ish_inv(w);
        let b = offset - shi_m(w, m);
        if a < 0 || b < 0 {
            return Err(Error::NegativeExponent(format!("q^{a} t^{b} from {w}")));
        }
        out.add_term(a as u32, b as u32, 1);
    }
    Ok(out)
}

/// `q^a t^b -> q^(k + a - b)`, i.e. `q^k p(q, 1/q)`.
pub fn specialize_antidiagonal(p: &QTPoly, k: i64) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for ((a, b), c) in p.terms() {
        let e = k + a as i64 - b as i64;
        if e < 0 {
            return Err(Error::NegativeExponent(format!(
                "q^{e} from q^{a} t^{b} with k = {k}"
            )));
        }
        out = &out + &QPoly::monomial(c.clone(), e as usize);
    }
    Ok(out)
}

pub fn is_qt_symmetric(p: &QTPoly) -> bool {
    *p == p.swapped()
}

/// Matrix rendered as CSV: a header of column indices, then one line per row
/// prefixed by its row index.
pub fn matrix_csv(rows: &[Vec<BigInt>], row_label: &str, col_label: &str) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("{row_label}\\{col_label}");
    for c in 0..cols {
        out.push_str(&format!(",{c}"));
    }
    out.push('\n');
    for (r, row) in rows.iter().enumerate() {
        out.push_str(&r.to_string());
        for c in 0..cols {
            out.push(',');
            out.push_str(&row.get(c).cloned().unwrap_or_default().to_string());
        }
        out.push('\n');
    }
    out
}
