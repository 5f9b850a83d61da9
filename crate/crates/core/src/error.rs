use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window has {found} entries, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("window entries sum to {found}, expected n(n+1)/2 = {expected}")]
    BadSum { expected: i64, found: i64 },
    #[error("window entries {first} and {second} are congruent modulo {n}")]
    BadResidues { n: usize, first: i64, second: i64 },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("(({i},{j})) is not a standard affine transposition for n = {n}")]
    BadTransposition { i: i64, j: i64, n: usize },
    #[error("root e{a}-e{b} is not a positive root for n = {n}")]
    BadRoot { a: usize, b: usize, n: usize },
    #[error("generators {0} and {1} are comparable in the root poset")]
    ComparableGenerators(String, String),
    #[error("root set is not an order ideal")]
    NotAnIdeal,
    #[error("labeled path is invalid: {0}")]
    InvalidLabeledPath(String),
    #[error("valley {0} is an inversion of the labeling permutation")]
    ValleyViolation(String),
    #[error("window {0} is not the representing alcove of its Shi chamber")]
    NotRepresentingAlcove(String),
    #[error("no alcove realizes the requested address")]
    AddressNotRealized,
    #[error("p = {p} is not coprime to n = {n}")]
    NotCoprime { p: u64, n: usize },
    #[error("chamber {0} has more than one minimum-length alcove")]
    NonUniqueMinimum(String),
    #[error("bounded chamber {0} has more than one maximum-length alcove")]
    NonUniqueMaximum(String),
    #[error("unknown arrangement family {0:?}")]
    UnknownFamily(String),
    #[error("point counts at the chosen primes do not fit one integer polynomial of degree {0}")]
    InsufficientPrimes(usize),
    #[error("operation budget exceeded: needs {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("bad arguments: {0}")]
    BadArgs(String),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("negative exponent in {0}")]
    NegativeExponent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
