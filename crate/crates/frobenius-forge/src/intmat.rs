//! Small exact integer-matrix utilities: rank over Q and Smith normal
//! form invariant factors. Matrices here are tiny (rows = lattice
//! generators, columns = variables), so the quadratic-ish algorithms
//! below are more than enough.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank of an integer matrix over the rationals, by fraction-free
/// Gaussian elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nrows {
            if !m[i][col].is_zero() {
                let a = m[rank][col].clone();
                let b = m[i][col].clone();
                for j in col..ncols {
                    let v = &a * &m[i][j] - &b * &m[rank][j];
                    m[i][j] = v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Nonzero invariant factors d_1 | d_2 | ... of the integer matrix,
/// i.e. the diagonal of its Smith normal form with zeros dropped.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Find a nonzero pivot in the trailing block.
        let mut pivot = None;
        'outer: for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // Clear row and column t with Euclidean steps until both are clean.
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if !m[i][t].is_zero() {
                    let q = div_round(&m[i][t], &m[t][t]);
                    if !q.is_zero() {
                        for j in t..ncols {
                            let v = &m[i][j] - &q * &m[t][j];
                            m[i][j] = v;
                        }
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..ncols {
                if !m[t][j].is_zero() {
                    let q = div_round(&m[t][j], &m[t][t]);
                    if !q.is_zero() {
                        for row in m.iter_mut().take(nrows).skip(t) {
                            let v = &row[j] - &q * &row[t];
                            row[j] = v;
                        }
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (a, b) = (factors[i].clone(), factors[i + 1].clone());
            if !(&b % &a).is_zero() {
                let g = a.gcd(&b);
                let l = &a * &b / &g;
                factors[i] = g;
                factors[i + 1] = l;
                changed = true;
            }
        }
    }
    factors
}

/// Rounded division keeping remainders small, for the Euclidean steps.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_segre_kernel_generators() {
        let rows = vec![
            vec![1, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
            vec![0, 1, 0, 1],
        ];
        assert_eq!(rank(&rows), 3);
    }

    #[test]
    fn invariant_factors_of_even_sublattice() {
        // {(a,b): a+b even} is generated by (2,0),(1,1),(0,2); Z^2 quotient is Z/2.
        let rows = vec![vec![2, 0], vec![1, 1], vec![0, 2]];
        assert_eq!(
            invariant_factors(&rows),
            vec![BigInt::from(1), BigInt::from(2)]
        );
    }

    #[test]
    fn invariant_factors_diag() {
        let rows = vec![vec![2, 0], vec![0, 6]];
        assert_eq!(
            invariant_factors(&rows),
            vec![BigInt::from(2), BigInt::from(6)]
        );
    }

    #[test]
    fn invariant_factors_divisibility_fixup() {
        let rows = vec![vec![4, 0], vec![0, 6]];
        assert_eq!(
            invariant_factors(&rows),
            vec![BigInt::from(2), BigInt::from(12)]
        );
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[]), 0);
    }
}
