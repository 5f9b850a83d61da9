//! Exact combinatorics of the affine symmetric group of type A: window
//! arithmetic, the `shi`/`ish` statistics and their inverses, root ideals and
//! labeled Dyck paths, Sommers simplices, Shi/Ish arrangements and
//! bivariate q,t-generating functions.

pub mod afperm;
pub mod arr;
mod error;
pub mod fm;
pub mod paths;
pub mod qt;
pub mod regions;
pub mod roots;
pub mod stats;

pub use afperm::{AffineTransposition, FinitePermutation, RootLatticeVector, Window};
pub use arr::{Arrangement, Family, Hyperplane};
pub use error::{Error, Result};
pub use paths::{LabeledPath, RootIdeal};
pub use qt::{QPoly, QTPoly};
pub use regions::{ChamberDescriptor, SimplexSpec};
pub use roots::{Address, PositiveRoot};
pub use stats::InversionPartition;

/// Binomial coefficient C(n, 2).
pub fn choose2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}
