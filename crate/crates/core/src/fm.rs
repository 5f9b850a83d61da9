//! Fourier-Motzkin elimination over the rationals, kept in integer form.
//!
//! Each constraint `c . x >= b` is stored with integer entries divided by
//! their common gcd; combining two constraints uses positive integer
//! multipliers, so the arithmetic is exact.

use std::collections::BTreeSet;

use num_integer::Integer;

/// `coeffs . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub coeffs: Vec<i128>,
    pub rhs: i128,
}

impl Inequality {
    pub fn new(coeffs: Vec<i128>, rhs: i128) -> Self {
        scale_free(&Self { coeffs, rhs })
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Decides whether `{x in Q^dim : every inequality holds}` is nonempty.
pub fn is_feasible(dim: usize, system: &[Inequality]) -> bool {
    let mut rows: BTreeSet<Inequality> = BTreeSet::new();
    for row in system {
        assert_eq!(row.coeffs.len(), dim, "constraint dimension mismatch");
        rows.insert(scale_free(row));
    }
    for var in 0..dim {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for row in rows {
            match row.coeffs[var].signum() {
                1 => lower.push(row),
                -1 => upper.push(row),
                _ => {
                    rest.insert(row);
                }
            }
        }
        for lo in &lower {
            for up in &upper {
                let (a, b) = (lo.coeffs[var], -up.coeffs[var]);
                let coeffs = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(&x, &y)| b * x + a * y)
                    .collect();
                let combined = scale_free(&Inequality {
                    coeffs,
                    rhs: b * lo.rhs + a * up.rhs,
                });
                rest.insert(combined);
            }
        }
        rows = rest;
        if rows.iter().any(|r| r.is_trivial() && r.rhs > 0) {
            return false;
        }
    }
    rows.iter().all(|r| !r.is_trivial() || r.rhs <= 0)
}

/// Divides by the gcd of all entries including the right-hand side, which
/// keeps the rational solution set unchanged.
fn scale_free(row: &Inequality) -> Inequality {
    let g = row.coeffs.iter().fold(row.rhs.abs(), |g, &c| g.gcd(&c));
    if g > 1 {
        Inequality {
            coeffs: row.coeffs.iter().map(|c| c / g).collect(),
            rhs: row.rhs / g,
        }
    } else {
        row.clone()
    }
}

/// True when the polyhedral cone `{x : rows hold}` (homogeneous rows, `rhs`
/// ignored) is `{0}`: no coordinate can be pushed to `+1` or `-1`.
pub fn cone_is_pointed_zero(dim: usize, rows: &[Inequality]) -> bool {
    let homogeneous: Vec<Inequality> = rows
        .iter()
        .map(|r| Inequality {
            coeffs: r.coeffs.clone(),
            rhs: 0,
        })
        .collect();
    for var in 0..dim {
        for sign in [1i128, -1] {
            let mut coeffs = vec![0; dim];
            coeffs[var] = sign;
            let mut system = homogeneous.clone();
            system.push(Inequality { coeffs, rhs: 1 });
            if is_feasible(dim, &system) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ineq(c: &[i128], b: i128) -> Inequality {
        Inequality::new(c.to_vec(), b)
    }

    #[test]
    fn interval_feasibility() {
        // 1 <= x <= 2
        assert!(is_feasible(1, &[ineq(&[1], 1), ineq(&[-1], -2)]));
        // 2 <= x <= 1
        assert!(!is_feasible(1, &[ineq(&[1], 2), ineq(&[-1], -1)]));
    }

    #[test]
    fn rational_point_only() {
        // 2x >= 1 and 2x <= 1 has the rational solution x = 1/2
        assert!(is_feasible(
            1,
            &[
                Inequality {
                    coeffs: vec![2],
                    rhs: 1
                },
                Inequality {
                    coeffs: vec![-2],
                    rhs: -1
                }
            ]
        ));
    }

    #[test]
    fn triangle() {
        // x >= 0, y >= 0, x + y <= 1, x - y >= 2 is empty
        let sys = [
            ineq(&[1, 0], 0),
            ineq(&[0, 1], 0),
            ineq(&[-1, -1], -1),
            ineq(&[1, -1], 2),
        ];
        assert!(!is_feasible(2, &sys));
        assert!(is_feasible(2, &sys[..3]));
    }

    #[test]
    fn cones() {
        // x >= 0, y >= 0 is not the zero cone
        assert!(!cone_is_pointed_zero(
            2,
            &[ineq(&[1, 0], 0), ineq(&[0, 1], 0)]
        ));
        // x >= 0, y >= 0, x + y <= 0
        assert!(cone_is_pointed_zero(
            2,
            &[ineq(&[1, 0], 0), ineq(&[0, 1], 0), ineq(&[-1, -1], 0)]
        ));
        // x = y, x >= 0 recedes along (1,1)
        let eq = [ineq(&[1, -1], 0), ineq(&[-1, 1], 0), ineq(&[1, 0], 0)];
        assert!(!cone_is_pointed_zero(2, &eq));
    }
}
