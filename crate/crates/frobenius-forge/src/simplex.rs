//! Exact rational linear programming.
//!
//! A small dense two-phase simplex over `BigRational` with Bland's rule.
//! Problem sizes here are tiny (a handful of variables per weight system),
//! so clarity and exactness win over sparse cleverness. No floating point
//! enters at any stage: the reported optimum is an exact rational.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Outcome of `maximize`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// Optimal value and one optimal point.
    Optimal {
        value: Rat,
        point: Vec<Rat>,
    },
    Infeasible,
    Unbounded,
}

/// Maximize `c·x` subject to `a·x = b`, `x >= 0`.
///
/// Rows of `a` must all have the same length as `c`.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Tableau layout: n structural columns, m artificial columns, rhs.
    // Row signs flipped so the rhs is nonnegative and the artificial
    // basis is feasible for phase one.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = Vec::with_capacity(n + m + 1);
        for j in 0..n {
            row.push(if flip {
                -a[i][j].clone()
            } else {
                a[i][j].clone()
            });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase one: maximize -sum(artificials).
    let mut obj = vec![Rat::zero(); n + m + 1];
    for j in n..n + m {
        obj[j] = -Rat::one();
    }
    price_out(&mut obj, &t, &basis);
    if !run_simplex(&mut t, &mut obj, &mut basis, n + m) {
        // Phase-one objective is bounded by 0, so this cannot happen.
        unreachable!("phase one unbounded");
    }
    // The objective row's rhs carries the negated value.
    if obj[n + m].is_positive() {
        return LpOutcome::Infeasible;
    }
    // Pivot any artificial variable out of the basis where possible;
    // rows where it is not possible are redundant and harmless.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut obj, i, j);
                basis[i] = j;
            }
        }
    }

    // Phase two: real objective, artificial columns frozen at zero.
    let mut obj2 = vec![Rat::zero(); n + m + 1];
    obj2[..n].clone_from_slice(c);
    price_out(&mut obj2, &t, &basis);
    if !run_simplex(&mut t, &mut obj2, &mut basis, n) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![Rat::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            point[basis[i]] = t[i][n + m].clone();
        }
    }
    LpOutcome::Optimal {
        value: -obj2[n + m].clone(),
        point,
    }
}

/// Make the objective row consistent with the current basis
/// (zero reduced cost on basic columns).
fn price_out(obj: &mut [Rat], t: &[Vec<Rat>], basis: &[usize]) {
    for (i, &bj) in basis.iter().enumerate() {
        if !obj[bj].is_zero() {
            let f = obj[bj].clone();
            let width = obj.len();
            for k in 0..width {
                let delta = &f * &t[i][k];
                obj[k] -= delta;
            }
        }
    }
}

/// Bland's rule simplex on columns `0..ncols`. Returns false on
/// unboundedness. The objective row stores reduced costs negated so a
/// positive entry means an improving column, and its last entry carries
/// the current objective value.
fn run_simplex(t: &mut [Vec<Rat>], obj: &mut [Rat], basis: &mut [usize], ncols: usize) -> bool {
    let m = t.len();
    let rhs = obj.len() - 1;
    loop {
        // Entering column: smallest index with positive reduced cost.
        let Some(enter) = (0..ncols).find(|&j| obj[j].is_positive()) else {
            return true;
        };
        // Leaving row: minimum ratio, ties broken by smallest basis index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[leave.expect("leave set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return false;
        };
        pivot(t, obj, leave, enter);
        basis[leave] = enter;
    }
}

fn pivot(t: &mut [Vec<Rat>], obj: &mut [Rat], row: usize, col: usize) {
    let width = t[row].len();
    let inv = t[row][col].clone().recip();
    for k in 0..width {
        t[row][k] *= inv.clone();
    }
    for i in 0..t.len() {
        if i != row && !t[i][col].is_zero() {
            let f = t[i][col].clone();
            for k in 0..width {
                let delta = &f * &t[row][k];
                t[i][k] -= delta;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for k in 0..width {
            let delta = &f * &t[row][k];
            obj[k] -= delta;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_bounded_lp() {
        // max x + y  s.t.  x + y + s = 1
        let a = vec![vec![rat(1), rat(1), rat(1)]];
        let b = vec![rat(1)];
        let c = vec![rat(1), rat(1), rat(0)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn infeasible_lp() {
        // x = -1, x >= 0
        let a = vec![vec![rat(1)]];
        let b = vec![rat(-1)];
        let c = vec![rat(1)];
        assert_eq!(maximize(&a, &b, &c), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_lp() {
        // max x  s.t.  x - y = 0
        let a = vec![vec![rat(1), rat(-1)]];
        let b = vec![rat(0)];
        let c = vec![rat(1), rat(0)];
        assert_eq!(maximize(&a, &b, &c), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_pivots_terminate() {
        // Degenerate constraints that force zero-ratio pivots.
        let a = vec![
            vec![rat(1), rat(-1), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0), rat(1)],
        ];
        let b = vec![rat(0), rat(2)];
        let c = vec![rat(1), rat(0), rat(0), rat(0)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // max x s.t. 3x + s = 1  =>  x = 1/3 exactly.
        let a = vec![vec![rat(3), rat(1)]];
        let b = vec![rat(1)];
        let c = vec![rat(1), rat(0)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_frac(1, 3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
