//! Weight lattices with torsion and the decision procedures on them:
//! semigroup membership for the support of the ambient polynomial ring,
//! the strongly-critical test by exact linear programming, and exact
//! division of characters by prime powers.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::diophantine::{self, SearchLimits};
use crate::error::{Error, Result};
use crate::intmat;
use crate::simplex::{self, rat, LpOutcome, Rat};

/// A finitely generated abelian grading group Z^r + Z/m_1 + ... + Z/m_s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingGroup {
    free_rank: usize,
    torsion_orders: Vec<u64>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<u64>) -> Result<Self> {
        if let Some(&m) = torsion_orders.iter().find(|&&m| m < 2) {
            return Err(Error::Input(format!(
                "torsion order {m} must be at least 2"
            )));
        }
        Ok(GradingGroup {
            free_rank,
            torsion_orders,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_orders.is_empty()
    }

    /// Build a character, reducing torsion entries mod their orders.
    pub fn character(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<Character> {
        if free.len() != self.free_rank || torsion.len() != self.torsion_orders.len() {
            return Err(Error::Input(format!(
                "character shape ({}, {}) does not match grading ({}, {})",
                free.len(),
                torsion.len(),
                self.free_rank,
                self.torsion_orders.len()
            )));
        }
        let torsion = torsion
            .iter()
            .zip(&self.torsion_orders)
            .map(|(&t, &m)| t.rem_euclid(m as i64) as u64)
            .collect();
        Ok(Character { free, torsion })
    }

    pub fn zero_character(&self) -> Character {
        Character {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.torsion_orders.len()],
        }
    }
}

/// An element of the grading group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub free: Vec<i64>,
    pub torsion: Vec<u64>,
}

impl Character {
    pub fn add(&self, other: &Character, grading: &GradingGroup) -> Character {
        Character {
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + b)
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .zip(&grading.torsion_orders)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
        }
    }

    pub fn neg(&self, grading: &GradingGroup) -> Character {
        Character {
            free: self.free.iter().map(|a| -a).collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&grading.torsion_orders)
                .map(|(&a, &m)| (m - a % m) % m)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64, grading: &GradingGroup) -> Character {
        Character {
            free: self.free.iter().map(|a| a * k).collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&grading.torsion_orders)
                .map(|(&a, &m)| ((a as i128 * k as i128).rem_euclid(m as i128)) as u64)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&a| a == 0) && self.torsion.iter().all(|&t| t == 0)
    }

    pub fn to_rational(&self) -> RationalCharacter {
        RationalCharacter {
            free: self.free.iter().map(|&a| rat(a)).collect(),
            torsion: self.torsion.clone(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.free.iter().map(|a| a.to_string()), &self.torsion)
    }
}

/// A character divided by a prime power: exact rational free part plus an
/// honest torsion group element (division realized by a modular inverse).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalCharacter {
    pub free: Vec<Rat>,
    pub torsion: Vec<u64>,
}

impl RationalCharacter {
    /// Integral free part as a `Character`, when it is integral.
    pub fn to_integral(&self) -> Option<Character> {
        let mut free = Vec::with_capacity(self.free.len());
        for x in &self.free {
            if !x.is_integer() {
                return None;
            }
            free.push(i64::try_from(x.to_integer()).ok()?);
        }
        Some(Character {
            free,
            torsion: self.torsion.clone(),
        })
    }

    pub fn sub_character(&self, other: &Character, grading: &GradingGroup) -> RationalCharacter {
        RationalCharacter {
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a - rat(*b))
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .zip(&grading.torsion_orders)
                .map(|((&a, &b), &m)| ((a + m) - b % m) % m)
                .collect(),
        }
    }

    /// Exact division by q: free part divided as rationals, torsion part
    /// multiplied by the inverse of q modulo each torsion order.
    pub fn divide(&self, q: u64, grading: &GradingGroup) -> Result<RationalCharacter> {
        let qr = rat(q as i64);
        let mut torsion = Vec::with_capacity(self.torsion.len());
        for (&t, &m) in self.torsion.iter().zip(&grading.torsion_orders) {
            let inv = mod_inverse(q % m, m).ok_or_else(|| {
                Error::Input(format!(
                    "q = {q} is not invertible modulo torsion order {m}"
                ))
            })?;
            torsion.push(((t as u128 * inv as u128) % m as u128) as u64);
        }
        Ok(RationalCharacter {
            free: self.free.iter().map(|a| a / &qr).collect(),
            torsion,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|a| a.is_zero()) && self.torsion.iter().all(|&t| t == 0)
    }
}

impl fmt::Display for RationalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.free.iter().map(|a| a.to_string()), &self.torsion)
    }
}

fn write_parts<I: Iterator<Item = String>>(
    f: &mut fmt::Formatter<'_>,
    free: I,
    torsion: &[u64],
) -> fmt::Result {
    let mut parts: Vec<String> = free.collect();
    for t in torsion {
        parts.push(format!("{t}t"));
    }
    write!(f, "({})", parts.join(","))
}

/// Divide an integral character by q (spec-level convenience).
pub fn divide_character(
    chi: &Character,
    q: u64,
    grading: &GradingGroup,
) -> Result<RationalCharacter> {
    chi.to_rational().divide(q, grading)
}

/// Multiply by q; inverse of `divide_character` when both are defined.
pub fn multiply_character(chi: &Character, q: u64, grading: &GradingGroup) -> Character {
    chi.scale(q as i64, grading)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The weights of the torus/finite-diagonal action on the ambient
/// polynomial ring, together with the characteristic and a positive
/// grading of the variables.
///
/// `var_degrees` assigns each variable a positive integer degree. It
/// makes the ambient ring positively graded, which bounds every
/// minimal-generator search layer and supplies the half-open degree
/// interval that generators of pushforward summands live in.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    grading: GradingGroup,
    weights: Vec<Character>,
    prime: u64,
    var_degrees: Vec<u64>,
    generator_degree_bound: u64,
}

impl WeightSystem {
    pub fn new(
        grading: GradingGroup,
        weights: Vec<Character>,
        prime: u64,
        var_degrees: Option<Vec<u64>>,
    ) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::Input(format!("{prime} is not prime")));
        }
        for &m in grading.torsion_orders() {
            if m % prime == 0 {
                return Err(Error::Input(format!(
                    "characteristic {prime} divides torsion order {m}"
                )));
            }
        }
        for w in &weights {
            if w.free.len() != grading.free_rank || w.torsion.len() != grading.torsion_orders.len()
            {
                return Err(Error::Input("weight shape does not match grading".into()));
            }
        }
        let var_degrees = var_degrees.unwrap_or_else(|| vec![1; weights.len()]);
        if var_degrees.len() != weights.len() {
            return Err(Error::Input(format!(
                "{} variable degrees for {} variables",
                var_degrees.len(),
                weights.len()
            )));
        }
        if var_degrees.contains(&0) {
            return Err(Error::Input("variable degrees must be positive".into()));
        }
        let mut ws = WeightSystem {
            grading,
            weights,
            prime,
            var_degrees,
            generator_degree_bound: 0,
        };
        // Summands of pushforwards are generated in weighted degrees
        // strictly below the sum of the invariant ring's algebra
        // generator degrees (the polynomial-ring bound applies after
        // presenting the invariant ring by its Hilbert basis). Keep the
        // larger of that and the plain variable-degree sum.
        let hilbert = ws.degree_zero_hilbert_basis()?;
        let algebra_sum: u64 = hilbert.iter().map(|g| ws.weighted_degree(g)).sum();
        let var_sum: u64 = ws.var_degrees.iter().sum();
        ws.generator_degree_bound = algebra_sum.max(var_sum);
        Ok(ws)
    }

    pub fn grading(&self) -> &GradingGroup {
        &self.grading
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn var_degrees(&self) -> &[u64] {
        &self.var_degrees
    }

    /// Default cutoff for minimal-generator searches: minimal generators
    /// of pushforward summands have weighted degree strictly below the
    /// sum of the degree-zero Hilbert basis degrees (never less than the
    /// variable-degree sum).
    pub fn degree_bound(&self) -> u64 {
        self.generator_degree_bound
    }

    /// Sum of the variable degrees (the ambient polynomial-ring bound).
    pub fn variable_degree_sum(&self) -> u64 {
        self.var_degrees.iter().sum()
    }

    pub fn weighted_degree(&self, exponents: &[u64]) -> u64 {
        exponents
            .iter()
            .zip(&self.var_degrees)
            .map(|(e, d)| e * d)
            .sum()
    }

    /// Degree of the monomial with the given exponents.
    pub fn monomial_degree(&self, exponents: &[u64]) -> Character {
        let mut acc = self.grading.zero_character();
        for (w, &e) in self.weights.iter().zip(exponents) {
            if e > 0 {
                acc = acc.add(&w.scale(e as i64, &self.grading), &self.grading);
            }
        }
        acc
    }

    /// Krull dimension of the invariant ring: the number of variables
    /// minus the rank of the subgroup of Z^r spanned by the free parts
    /// of the weights.
    pub fn krull_dim(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.weights.iter().map(|w| w.free.clone()).collect();
        self.num_vars() - intmat::rank(&rows)
    }

    /// Coefficient matrix of the membership system: one row per free
    /// coordinate, then one row per torsion order with a `-m_j` column
    /// for that order's auxiliary variable.
    fn support_rows(&self) -> (Vec<Vec<i64>>, usize) {
        let d = self.num_vars();
        let s = self.grading.torsion_orders.len();
        let n = d + s;
        let mut rows = Vec::new();
        for k in 0..self.grading.free_rank {
            let mut row = vec![0i64; n];
            for (i, w) in self.weights.iter().enumerate() {
                row[i] = w.free[k];
            }
            rows.push(row);
        }
        for (j, &m) in self.grading.torsion_orders.iter().enumerate() {
            let mut row = vec![0i64; n];
            for (i, w) in self.weights.iter().enumerate() {
                row[i] = w.torsion[j] as i64;
            }
            row[d + j] = -(m as i64);
            rows.push(row);
        }
        (rows, n)
    }

    fn support_rhs(&self, chi: &Character) -> Vec<i64> {
        let mut rhs: Vec<i64> = chi.free.clone();
        rhs.extend(chi.torsion.iter().map(|&t| t as i64));
        rhs
    }

    /// Membership of `chi` in the semigroup generated by the weights,
    /// i.e. whether `chi` is the degree of some monomial.
    pub fn in_supp(&self, chi: &Character) -> bool {
        if chi.is_zero() {
            return true;
        }
        let (rows, n) = self.support_rows();
        diophantine::is_feasible(&rows, &self.support_rhs(chi), n)
    }

    /// Minimal exponent vectors of monomials of degree `chi`, i.e. the
    /// minimal solutions of the membership system. `limits` may carry a
    /// weighted-degree cutoff; incompleteness is surfaced to the caller.
    pub fn minimal_monomials(
        &self,
        chi: &Character,
        limits: &SearchLimits,
    ) -> diophantine::SearchOutcome {
        let d = self.num_vars();
        let s = self.grading.torsion_orders.len();
        let (rows, n) = self.support_rows();
        let caps = vec![None; n];
        let mut limits = limits.clone();
        if let Some(w) = &mut limits.degree_weights {
            debug_assert_eq!(w.len(), d);
            w.extend(std::iter::repeat_n(0, s));
        }
        let out =
            diophantine::minimal_inhomogeneous(&rows, &self.support_rhs(chi), n, &caps, &limits);
        // Project away the torsion auxiliaries and keep dominance-minimal
        // exponent vectors.
        let mut exps: Vec<Vec<u64>> = out
            .solutions
            .into_iter()
            .map(|mut x| {
                x.truncate(d);
                x
            })
            .collect();
        exps.sort();
        exps.dedup();
        let minimal: Vec<Vec<u64>> = exps
            .iter()
            .filter(|x| {
                !exps
                    .iter()
                    .any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b))
            })
            .cloned()
            .collect();
        diophantine::SearchOutcome {
            solutions: minimal,
            complete: out.complete,
        }
    }

    /// Hilbert basis of the degree-zero semigroup: the minimal nonzero
    /// exponent vectors of invariant monomials.
    pub fn degree_zero_hilbert_basis(&self) -> Result<Vec<Vec<u64>>> {
        let d = self.num_vars();
        let (rows, n) = self.support_rows();
        let caps = vec![None; n];
        let out = diophantine::minimal_solutions(&rows, n, &caps, &SearchLimits::default());
        if !out.complete {
            return Err(Error::Internal(
                "degree-zero Hilbert basis search truncated".into(),
            ));
        }
        let mut exps: Vec<Vec<u64>> = out
            .solutions
            .into_iter()
            .map(|mut x| {
                x.truncate(d);
                x
            })
            .filter(|x| x.iter().any(|&v| v > 0))
            .collect();
        exps.sort();
        exps.dedup();
        let minimal: Vec<Vec<u64>> = exps
            .iter()
            .filter(|x| {
                !exps
                    .iter()
                    .any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Decide whether the free part of `chi` is a rational combination
    /// `sum u_i * weight_i` with every `u_i` in the half-open interval
    /// (-1, 0]. The half-open strictness is handled by maximizing a slack
    /// with an exact rational simplex: the test passes exactly when the
    /// optimum is positive.
    pub fn is_strongly_critical(&self, chi: &Character) -> bool {
        self.is_strongly_critical_free(&chi.free.iter().map(|&a| rat(a)).collect::<Vec<_>>())
    }

    pub fn is_strongly_critical_free(&self, chi_free: &[Rat]) -> bool {
        let r = self.grading.free_rank;
        if r == 0 {
            return true;
        }
        debug_assert_eq!(chi_free.len(), r);
        let d = self.num_vars();
        if d == 0 {
            return chi_free.iter().all(|x| x.is_zero());
        }
        // Variables: t_1..t_d (= -u_i), s_1..s_d, eps+, eps-, s_0.
        let n = 2 * d + 3;
        let (ip, im, s0) = (2 * d, 2 * d + 1, 2 * d + 2);
        let mut a: Vec<Vec<Rat>> = Vec::new();
        let mut b: Vec<Rat> = Vec::new();
        for (k, chi_k) in chi_free.iter().enumerate() {
            let mut row = vec![rat(0); n];
            for (i, w) in self.weights.iter().enumerate() {
                row[i] = rat(w.free[k]);
            }
            a.push(row);
            b.push(-chi_k.clone());
        }
        for i in 0..d {
            let mut row = vec![rat(0); n];
            row[i] = rat(1);
            row[d + i] = rat(1);
            row[ip] = rat(1);
            row[im] = rat(-1);
            a.push(row);
            b.push(rat(1));
        }
        let mut row = vec![rat(0); n];
        row[ip] = rat(1);
        row[im] = rat(-1);
        row[s0] = rat(1);
        a.push(row);
        b.push(rat(1));

        let mut c = vec![rat(0); n];
        c[ip] = rat(1);
        c[im] = rat(-1);
        match simplex::maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => value.is_positive(),
            LpOutcome::Infeasible => false,
            LpOutcome::Unbounded => unreachable!("slack objective is bounded by 1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::rat_frac;

    fn free_ws(weights: &[i64], p: u64) -> WeightSystem {
        let g = GradingGroup::new(1, vec![]).unwrap();
        let ws: Vec<Character> = weights
            .iter()
            .map(|&w| g.character(vec![w], vec![]).unwrap())
            .collect();
        WeightSystem::new(g, ws, p, None).unwrap()
    }

    fn torsion_ws(order: u64, weights: &[i64], p: u64) -> WeightSystem {
        let g = GradingGroup::new(0, vec![order]).unwrap();
        let ws: Vec<Character> = weights
            .iter()
            .map(|&w| g.character(vec![], vec![w]).unwrap())
            .collect();
        WeightSystem::new(g, ws, p, None).unwrap()
    }

    #[test]
    fn in_supp_examples() {
        let ws = free_ws(&[1, 1, -1, -1], 2);
        let zero = ws.grading().zero_character();
        assert!(ws.in_supp(&zero));
        let one = ws.grading().character(vec![1], vec![]).unwrap();
        assert!(ws.in_supp(&one));

        let gap = free_ws(&[2, 3], 5);
        let one = gap.grading().character(vec![1], vec![]).unwrap();
        assert!(!gap.in_supp(&one));
        let five = gap.grading().character(vec![5], vec![]).unwrap();
        assert!(gap.in_supp(&five));
    }

    #[test]
    fn in_supp_agrees_with_bounded_enumeration() {
        // Independent oracle: exhaustive scan of coefficient boxes.
        let ws = free_ws(&[2, 3], 7);
        for target in -3i64..12 {
            let chi = ws.grading().character(vec![target], vec![]).unwrap();
            let mut oracle = false;
            for a in 0..=6u64 {
                for b in 0..=4u64 {
                    if 2 * a as i64 + 3 * b as i64 == target {
                        oracle = true;
                    }
                }
            }
            assert_eq!(ws.in_supp(&chi), oracle, "target {target}");
        }
    }

    #[test]
    fn strongly_critical_examples() {
        let ws = free_ws(&[1, 1, -1, -1], 2);
        let g = ws.grading().clone();
        assert!(ws.is_strongly_critical(&g.zero_character()));
        assert!(ws.is_strongly_critical(&g.character(vec![1], vec![]).unwrap()));
        assert!(ws.is_strongly_critical(&g.character(vec![-1], vec![]).unwrap()));
        assert!(!ws.is_strongly_critical(&g.character(vec![2], vec![]).unwrap()));
        assert!(!ws.is_strongly_critical(&g.character(vec![-2], vec![]).unwrap()));
        assert!(!ws.is_strongly_critical(&g.character(vec![3], vec![]).unwrap()));
    }

    #[test]
    fn strongly_critical_boundary_excluded() {
        // Single weight (1): chi = -1 needs u = -1, which the half-open
        // interval excludes.
        let ws = free_ws(&[1], 2);
        let minus_one = ws.grading().character(vec![-1], vec![]).unwrap();
        assert!(!ws.is_strongly_critical(&minus_one));
        let zero = ws.grading().zero_character();
        assert!(ws.is_strongly_critical(&zero));
    }

    #[test]
    fn strongly_critical_pure_torsion_is_trivial() {
        let ws = torsion_ws(2, &[1, 1], 3);
        for t in 0..2 {
            let chi = ws.grading().character(vec![], vec![t]).unwrap();
            assert!(ws.is_strongly_critical(&chi));
        }
    }

    #[test]
    fn strongly_critical_lp_witness_matches_grid_oracle() {
        // Denominator-2 grid finds u = (0,0,-1/2,-1/2) for chi = 1.
        let ws = free_ws(&[1, 1, -1, -1], 2);
        let one = ws.grading().character(vec![1], vec![]).unwrap();
        assert!(ws.is_strongly_critical(&one));
        let mut found = false;
        let grid = [rat(0), rat_frac(-1, 2)];
        for u1 in &grid {
            for u2 in &grid {
                for u3 in &grid {
                    for u4 in &grid {
                        let sum = u1 + u2 - u3 - u4;
                        if sum == rat(1) {
                            found = true;
                        }
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn divide_character_examples() {
        let g = GradingGroup::new(1, vec![]).unwrap();
        let chi = g.character(vec![3], vec![]).unwrap();
        let half = divide_character(&chi, 3, &g).unwrap();
        assert_eq!(half.free, vec![rat(1)]);

        let g3 = GradingGroup::new(0, vec![3]).unwrap();
        let chi = g3.character(vec![], vec![1]).unwrap();
        let divided = divide_character(&chi, 7, &g3).unwrap();
        assert_eq!(divided.torsion, vec![1]);
        assert!(divide_character(&chi, 3, &g3).is_err());
    }

    #[test]
    fn divide_inverts_multiply() {
        let g = GradingGroup::new(1, vec![5]).unwrap();
        for f in -4i64..5 {
            for t in 0..5i64 {
                let chi = g.character(vec![f], vec![t]).unwrap();
                let multiplied = multiply_character(&chi, 7, &g);
                let back = divide_character(&multiplied, 7, &g).unwrap();
                assert_eq!(back.to_integral().unwrap(), chi);
            }
        }
    }

    #[test]
    fn krull_dim_examples() {
        assert_eq!(free_ws(&[1, 1, -1, -1], 2).krull_dim(), 3);
        assert_eq!(torsion_ws(2, &[1, 1], 3).krull_dim(), 2);
        let trivial = WeightSystem::new(
            GradingGroup::new(0, vec![]).unwrap(),
            vec![
                GradingGroup::new(0, vec![]).unwrap().zero_character(),
                GradingGroup::new(0, vec![]).unwrap().zero_character(),
            ],
            2,
            None,
        )
        .unwrap();
        assert_eq!(trivial.krull_dim(), 2);
    }

    #[test]
    fn weight_system_validation() {
        let g = GradingGroup::new(0, vec![3]).unwrap();
        let w = g.character(vec![], vec![1]).unwrap();
        assert!(WeightSystem::new(g.clone(), vec![w.clone()], 3, None).is_err());
        assert!(WeightSystem::new(g.clone(), vec![w.clone()], 4, None).is_err());
        assert!(WeightSystem::new(g.clone(), vec![w.clone()], 7, Some(vec![0])).is_err());
        assert!(WeightSystem::new(g, vec![w], 7, None).is_ok());
    }

    #[test]
    fn minimal_monomials_of_odd_class() {
        let ws = torsion_ws(2, &[1, 1], 3);
        let odd = ws.grading().character(vec![], vec![1]).unwrap();
        let out = ws.minimal_monomials(&odd, &SearchLimits::default());
        assert!(out.complete);
        assert_eq!(out.solutions, vec![vec![0, 1], vec![1, 0]]);
    }
}
