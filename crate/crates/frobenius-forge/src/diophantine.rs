//! Minimal nonnegative solutions of linear Diophantine systems.
//!
//! Implements the Contejean–Devie search: breadth-first exploration of
//! N^n from the unit vectors, where a node `x` with defect `Ax != 0` is
//! extended in direction `i` only when `<Ax, A e_i> < 0`. Every minimal
//! solution of `Ax = 0` is reached by such a path, and the search
//! terminates without any external degree bound. Inhomogeneous systems
//! `Ax = b` are homogenized with an extra variable capped at 1; the
//! minimal solutions with that coordinate equal to 1 are exactly the
//! minimal solutions of the original system.
//!
//! An optional weighted-degree cutoff prunes the walk; if it ever fires,
//! the result is reported as truncated rather than silently incomplete.

use std::collections::HashSet;

/// Limits for a search. `degree_weights`, when present, assigns a
/// nonnegative weight per variable; nodes whose weighted degree exceeds
/// `degree_cutoff` are pruned and the search is marked truncated.
///
/// When `truncation_flag_var` is set, only pruned nodes with that
/// coordinate positive mark the search truncated. Homogenized searches
/// use it for the marker variable: every solution carrying the marker is
/// reachable through marker-first paths (the marker unit vector is below
/// any such solution), so a pruned marker-free node cannot hide one.
#[derive(Debug, Clone, Default)]
pub struct SearchLimits {
    pub degree_weights: Option<Vec<u64>>,
    pub degree_cutoff: u64,
    pub node_budget: Option<usize>,
    pub truncation_flag_var: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub solutions: Vec<Vec<u64>>,
    /// True when no node was pruned by the degree cutoff or node budget,
    /// i.e. the solution list is provably complete.
    pub complete: bool,
}

struct Walk<'a> {
    cols: Vec<Vec<i64>>,
    n: usize,
    caps: &'a [Option<u64>],
    limits: &'a SearchLimits,
}

impl<'a> Walk<'a> {
    fn weighted_degree(&self, x: &[u64]) -> u64 {
        match &self.limits.degree_weights {
            Some(w) => x.iter().zip(w).map(|(a, b)| a * b).sum(),
            None => 0,
        }
    }
}

/// All minimal nonzero solutions of `rows · x = 0` over nonnegative
/// integers, with per-variable caps (`caps[i] = Some(c)` restricts
/// `x_i <= c`). Capping a coordinate only discards solutions that
/// exceed the cap; the ones within are still found.
pub fn minimal_solutions(
    rows: &[Vec<i64>],
    n: usize,
    caps: &[Option<u64>],
    limits: &SearchLimits,
) -> SearchOutcome {
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut cols = vec![vec![0i64; rows.len()]; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            cols[j][i] = a;
        }
    }
    let walk = Walk {
        cols,
        n,
        caps,
        limits,
    };

    let mut minimals: Vec<Vec<u64>> = Vec::new();
    let mut frontier: Vec<(Vec<u64>, Vec<i64>)> = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut complete = true;
    let mut nodes = 0usize;

    let flags_truncation = |x: &[u64]| match limits.truncation_flag_var {
        Some(i) => x[i] > 0,
        None => true,
    };

    for j in 0..n {
        if caps[j] == Some(0) {
            continue;
        }
        let mut x = vec![0u64; n];
        x[j] = 1;
        if limits.degree_weights.is_some() && walk.weighted_degree(&x) > limits.degree_cutoff {
            if flags_truncation(&x) {
                complete = false;
            }
            continue;
        }
        let defect = walk.cols[j].clone();
        if seen.insert(x.clone()) {
            frontier.push((x, defect));
        }
    }

    while !frontier.is_empty() {
        let mut next: Vec<(Vec<u64>, Vec<i64>)> = Vec::new();
        for (x, defect) in frontier.drain(..) {
            nodes += 1;
            if let Some(budget) = limits.node_budget {
                if nodes > budget {
                    return SearchOutcome {
                        solutions: minimals,
                        complete: false,
                    };
                }
            }
            if defect.iter().all(|&v| v == 0) {
                if !minimals.iter().any(|m| dominates(&x, m)) {
                    minimals.retain(|m| !dominates(m, &x));
                    minimals.push(x);
                }
                continue;
            }
            if minimals.iter().any(|m| dominates(&x, m)) {
                continue;
            }
            for j in 0..walk.n {
                if let Some(cap) = walk.caps[j] {
                    if x[j] >= cap {
                        continue;
                    }
                }
                let dot: i128 = defect
                    .iter()
                    .zip(&walk.cols[j])
                    .map(|(&d, &c)| d as i128 * c as i128)
                    .sum();
                if dot >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if limits.degree_weights.is_some()
                    && walk.weighted_degree(&y) > limits.degree_cutoff
                {
                    if flags_truncation(&y) {
                        complete = false;
                    }
                    continue;
                }
                if minimals.iter().any(|m| dominates(&y, m)) {
                    continue;
                }
                if seen.insert(y.clone()) {
                    let mut d2 = defect.clone();
                    for (i, &c) in walk.cols[j].iter().enumerate() {
                        d2[i] += c;
                    }
                    next.push((y, d2));
                }
            }
        }
        frontier = next;
    }

    minimals.sort();
    SearchOutcome {
        solutions: minimals,
        complete,
    }
}

/// Minimal nonnegative solutions of the inhomogeneous system
/// `rows · x = rhs`. Returns the solutions (in the original `n`
/// variables) and the completeness flag.
pub fn minimal_inhomogeneous(
    rows: &[Vec<i64>],
    rhs: &[i64],
    n: usize,
    caps: &[Option<u64>],
    limits: &SearchLimits,
) -> SearchOutcome {
    let mut hrows: Vec<Vec<i64>> = Vec::with_capacity(rows.len());
    for (row, &b) in rows.iter().zip(rhs) {
        let mut r = row.clone();
        r.push(-b);
        hrows.push(r);
    }
    let mut hcaps = caps.to_vec();
    hcaps.push(Some(1));
    let hlimits = SearchLimits {
        degree_weights: limits.degree_weights.as_ref().map(|w| {
            let mut w = w.clone();
            w.push(0);
            w
        }),
        truncation_flag_var: Some(n),
        ..limits.clone()
    };
    let out = minimal_solutions(&hrows, n + 1, &hcaps, &hlimits);
    let mut solutions: Vec<Vec<u64>> = out
        .solutions
        .into_iter()
        .filter(|x| x[n] == 1)
        .map(|mut x| {
            x.pop();
            x
        })
        .collect();
    solutions.sort();
    SearchOutcome {
        solutions,
        complete: out.complete,
    }
}

/// True when `rows · x = rhs` has any nonnegative integer solution.
pub fn is_feasible(rows: &[Vec<i64>], rhs: &[i64], n: usize) -> bool {
    let caps = vec![None; n];
    let out = minimal_inhomogeneous(rows, rhs, n, &caps, &SearchLimits::default());
    debug_assert!(out.complete);
    !out.solutions.is_empty()
}

fn dominates(x: &[u64], y: &[u64]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(rows: &[Vec<i64>], rhs: &[i64], n: usize) -> Vec<Vec<u64>> {
        let caps = vec![None; n];
        let out = minimal_inhomogeneous(rows, rhs, n, &caps, &SearchLimits::default());
        assert!(out.complete);
        out.solutions
    }

    #[test]
    fn hilbert_basis_of_parity_kernel() {
        // m1 + m2 - 2v = 0: Hilbert basis (2,0,1), (1,1,1), (0,2,1).
        let rows = vec![vec![1, 1, -2]];
        let out = minimal_solutions(&rows, 3, &[None, None, None], &SearchLimits::default());
        assert!(out.complete);
        assert_eq!(
            out.solutions,
            vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 1]]
        );
    }

    #[test]
    fn mixed_sign_kernel() {
        // a + b - c - d = 0 has the four obvious pairings as Hilbert basis.
        let rows = vec![vec![1, 1, -1, -1]];
        let out = minimal_solutions(&rows, 4, &[None; 4], &SearchLimits::default());
        assert!(out.complete);
        assert_eq!(
            out.solutions,
            vec![
                vec![0, 1, 0, 1],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![1, 0, 1, 0]
            ]
        );
    }

    #[test]
    fn numerical_semigroup_gap() {
        // 2a + 3b = 1 has no solution; 2a + 3b = 5 has minimal (1,1).
        assert!(!is_feasible(&[vec![2, 3]], &[1], 2));
        assert_eq!(solve(&[vec![2, 3]], &[5], 2), vec![vec![1, 1]]);
    }

    #[test]
    fn inhomogeneous_minimal_solutions() {
        // a + b - c - d = 1: minimal solutions have one positive entry.
        let sols = solve(&[vec![1, 1, -1, -1]], &[1], 4);
        assert_eq!(sols, vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0]]);
    }

    #[test]
    fn zero_rhs_gives_origin() {
        let sols = solve(&[vec![1, 1, -1, -1]], &[0], 4);
        assert_eq!(sols, vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn cutoff_reports_truncation() {
        let limits = SearchLimits {
            degree_weights: Some(vec![1, 1]),
            degree_cutoff: 0,
            node_budget: None,
            truncation_flag_var: None,
        };
        let out = minimal_inhomogeneous(&[vec![2, 3]], &[5], 2, &[None, None], &limits);
        assert!(!out.complete);
        assert!(out.solutions.is_empty());
    }

    #[test]
    fn empty_system_minimal_solution_is_origin() {
        let sols = solve(&[], &[], 2);
        assert_eq!(sols, vec![vec![0, 0]]);
    }
}
