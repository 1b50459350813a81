//! Truncated operators on a polynomial ring in characteristic p.
//!
//! Operators on k[x_1..x_d] are infinite-dimensional objects; here they
//! live on an explicit window (all monomials of total degree below a
//! bound) together with a tracked safe degree: the largest input degree
//! whose outputs are certainly uncontaminated by truncation. Every
//! verdict (order of an operator, linearity over q-th powers) is only
//! asserted on the safe part of the window, so it is a finite certified
//! computation.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A monomial window: all exponent tuples of total degree < `bound`.
#[derive(Debug)]
pub struct Window {
    vars: usize,
    prime: u64,
    bound: u32,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Window {
    pub fn new(vars: usize, prime: u64, bound: u32) -> Arc<Window> {
        assert!(vars >= 1 && prime >= 2 && bound >= 1);
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; vars];
        loop {
            if cur.iter().sum::<u32>() < bound {
                monomials.push(cur.clone());
            }
            // odometer over the box [0, bound)^vars
            let mut i = 0;
            loop {
                if i == vars {
                    break;
                }
                cur[i] += 1;
                if cur[i] < bound {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
            if i == vars {
                break;
            }
        }
        monomials.sort_by_key(|m| (m.iter().sum::<u32>(), m.clone()));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Arc::new(Window {
            vars,
            prime,
            bound,
            monomials,
            index,
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn size(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomial(&self, i: usize) -> &[u32] {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn degree(&self, i: usize) -> i64 {
        self.monomials[i].iter().map(|&e| e as i64).sum()
    }
}

/// A linear map on the window with truncation bookkeeping.
///
/// `shift_bound` is an upper bound on (output degree - input degree)
/// of the untruncated operator; `safe_degree` is the largest input
/// total degree whose column is exact (negative when nothing is).
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    window: Arc<Window>,
    /// Column-major dense matrix over F_p: entry(row, col) at
    /// `cols[col * size + row]`.
    cols: Vec<u64>,
    shift_bound: i64,
    safe_degree: i64,
}

impl TruncatedOperator {
    fn empty(window: &Arc<Window>, shift_bound: i64, safe_degree: i64) -> TruncatedOperator {
        TruncatedOperator {
            window: window.clone(),
            cols: vec![0; window.size() * window.size()],
            shift_bound,
            safe_degree,
        }
    }

    pub fn window(&self) -> &Arc<Window> {
        &self.window
    }

    pub fn safe_degree(&self) -> i64 {
        self.safe_degree
    }

    pub fn shift_bound(&self) -> i64 {
        self.shift_bound
    }

    fn entry_mut(&mut self, row: usize, col: usize) -> &mut u64 {
        let n = self.window.size();
        &mut self.cols[col * n + row]
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.cols[col * self.window.size() + row]
    }

    /// Multiplication by the monomial x^beta.
    pub fn multiplication(window: &Arc<Window>, beta: &[u32]) -> TruncatedOperator {
        let deg: i64 = beta.iter().map(|&e| e as i64).sum();
        let mut op = TruncatedOperator::empty(window, deg, window.bound() as i64 - 1 - deg);
        for col in 0..window.size() {
            let m = window.monomial(col);
            let target: Vec<u32> = m.iter().zip(beta).map(|(a, b)| a + b).collect();
            if let Some(row) = window.index_of(&target) {
                *op.entry_mut(row, col) = 1;
            }
        }
        op
    }

    /// The divided-power differential x^m -> binom(m, gamma) x^(m-gamma),
    /// the order-|gamma| building block of the operator ring in
    /// characteristic p.
    pub fn divided_partial(window: &Arc<Window>, gamma: &[u32]) -> TruncatedOperator {
        let p = window.prime();
        let mut op = TruncatedOperator::empty(window, 0, window.bound() as i64 - 1);
        for col in 0..window.size() {
            let m = window.monomial(col).to_vec();
            if m.iter().zip(gamma).any(|(&a, &b)| a < b) {
                continue;
            }
            let mut coeff = 1u64;
            for (&mi, &gi) in m.iter().zip(gamma) {
                coeff = coeff * binomial_mod_p(mi as u64, gi as u64, p) % p;
            }
            if coeff != 0 {
                let target: Vec<u32> = m.iter().zip(gamma).map(|(a, b)| a - b).collect();
                let row = window
                    .index_of(&target)
                    .expect("lower-degree monomial in window");
                *op.entry_mut(row, col) = coeff;
            }
        }
        op
    }

    /// The projection keeping monomials congruent to `v` mod q.
    pub fn residue_projection(window: &Arc<Window>, q: u64, v: &[u32]) -> TruncatedOperator {
        let mut op = TruncatedOperator::empty(window, 0, window.bound() as i64 - 1);
        for col in 0..window.size() {
            let m = window.monomial(col);
            if m.iter()
                .zip(v)
                .all(|(&a, &b)| (a as u64) % q == (b as u64) % q)
            {
                *op.entry_mut(col, col) = 1;
            }
        }
        op
    }

    pub fn add(&self, other: &TruncatedOperator) -> TruncatedOperator {
        let p = self.window.prime();
        let mut out = self.clone();
        for (a, b) in out.cols.iter_mut().zip(&other.cols) {
            *a = (*a + *b) % p;
        }
        out.shift_bound = self.shift_bound.max(other.shift_bound);
        out.safe_degree = self.safe_degree.min(other.safe_degree);
        out
    }

    pub fn scale(&self, c: u64) -> TruncatedOperator {
        let p = self.window.prime();
        let c = c % p;
        let mut out = self.clone();
        for a in out.cols.iter_mut() {
            *a = *a * c % p;
        }
        out
    }

    /// Build an operator from an arbitrary monomial map. The caller
    /// supplies a bound on the degree shift of the untruncated map;
    /// image terms outside the window are dropped and accounted for by
    /// the derived safe degree.
    pub fn from_map<F>(window: &Arc<Window>, shift_bound: i64, f: F) -> TruncatedOperator
    where
        F: Fn(&[u32]) -> Vec<(Vec<u32>, u64)>,
    {
        let p = window.prime();
        let mut op = TruncatedOperator::empty(
            window,
            shift_bound,
            window.bound() as i64 - 1 - shift_bound.max(0),
        );
        for col in 0..window.size() {
            for (target, coeff) in f(window.monomial(col)) {
                if let Some(row) = window.index_of(&target) {
                    let e = op.entry_mut(row, col);
                    *e = (*e + coeff) % p;
                }
            }
        }
        op
    }

    /// Operator composition self . other (apply `other` first).
    pub fn compose(&self, other: &TruncatedOperator) -> TruncatedOperator {
        let w = &self.window;
        let n = w.size();
        let p = w.prime();
        let mut out = TruncatedOperator::empty(
            w,
            self.shift_bound + other.shift_bound,
            other.safe_degree.min(self.safe_degree - other.shift_bound),
        );
        for col in 0..n {
            for mid in 0..n {
                let a = other.entry(mid, col);
                if a == 0 {
                    continue;
                }
                for row in 0..n {
                    let b = self.entry(row, mid);
                    if b != 0 {
                        let e = out.entry_mut(row, col);
                        *e = (*e + a * b) % p;
                    }
                }
            }
        }
        out
    }

    /// The commutator [x_i, theta], computed column by column.
    pub fn commutator_with_var(&self, i: usize) -> TruncatedOperator {
        let w = &self.window;
        let n = w.size();
        let p = w.prime();
        let mut out = TruncatedOperator::empty(
            w,
            self.shift_bound + 1,
            (self.safe_degree - 1).min(w.bound() as i64 - 2 - self.shift_bound),
        );
        for col in 0..n {
            let m = w.monomial(col).to_vec();
            // x_i * theta(x^m): shift theta's column up by e_i.
            for row in 0..n {
                let v = self.entry(row, col);
                if v != 0 {
                    let mut target = w.monomial(row).to_vec();
                    target[i] += 1;
                    if let Some(up) = w.index_of(&target) {
                        let e = out.entry_mut(up, col);
                        *e = (*e + v) % p;
                    }
                }
            }
            // minus theta(x_i * x^m): theta's column at m + e_i.
            let mut shifted = m;
            shifted[i] += 1;
            if let Some(src) = w.index_of(&shifted) {
                for row in 0..n {
                    let v = self.entry(row, src);
                    if v != 0 {
                        let e = out.entry_mut(row, col);
                        *e = (*e + p - v) % p;
                    }
                }
            }
        }
        out
    }

    /// True when every certified column is zero. Errors when nothing is
    /// certified.
    pub fn vanishes_on_safe_window(&self) -> Result<bool> {
        if self.safe_degree < 0 {
            return Err(Error::WindowTooSmall(format!(
                "safe degree exhausted (shift bound {}, window {})",
                self.shift_bound,
                self.window.bound()
            )));
        }
        let n = self.window.size();
        for col in 0..n {
            if self.window.degree(col) > self.safe_degree {
                continue;
            }
            for row in 0..n {
                if self.entry(row, col) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Apply to a monomial given by exponents; `None` if out of window.
    pub fn apply_monomial(&self, m: &[u32]) -> Option<Vec<(Vec<u32>, u64)>> {
        let col = self.window.index_of(m)?;
        let n = self.window.size();
        let mut out = Vec::new();
        for row in 0..n {
            let v = self.entry(row, col);
            if v != 0 {
                out.push((self.window.monomial(row).to_vec(), v));
            }
        }
        Some(out)
    }
}

fn binomial_mod_p(n: u64, k: u64, p: u64) -> u64 {
    // Lucas: binom(n, k) mod p from base-p digits.
    if k > n {
        return 0;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * binomial_small(nd, kd) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn binomial_small(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The smallest n such that every (n+1)-fold nested commutator of theta
/// with the variables vanishes on the safe window, or `None` when no
/// such n at most `max_order` exists. Nested commutators with the
/// variables commute among themselves, so only multisets of variables
/// are expanded.
pub fn operator_order(theta: &TruncatedOperator, max_order: u32) -> Result<Option<u32>> {
    let d = theta.window().vars();
    // level k: (k)-fold commutators indexed by a nondecreasing var list
    let mut level: Vec<(usize, TruncatedOperator)> = vec![(0, theta.clone())];
    for n in 0..=max_order {
        let mut next = Vec::new();
        let mut all_vanish = true;
        for (last_var, op) in &level {
            for i in *last_var..d {
                let c = op.commutator_with_var(i);
                if !c.vanishes_on_safe_window()? {
                    all_vanish = false;
                }
                next.push((i, c));
            }
        }
        if all_vanish {
            return Ok(Some(n));
        }
        level = next;
    }
    Ok(None)
}

/// Check theta(x_i^q * f) = x_i^q * theta(f) for all variables and all
/// certified monomials f.
pub fn is_rq_linear(theta: &TruncatedOperator, q: u64) -> Result<bool> {
    let w = theta.window();
    let n = w.size();
    let p = w.prime();
    let max_input =
        (theta.safe_degree() - q as i64).min(w.bound() as i64 - 1 - q as i64 - theta.shift_bound());
    if max_input < 0 {
        return Err(Error::WindowTooSmall(format!(
            "window bound {} cannot certify degree-{q} multiplications",
            w.bound()
        )));
    }
    for i in 0..w.vars() {
        for col in 0..n {
            let m = w.monomial(col).to_vec();
            if m.iter().map(|&e| e as i64).sum::<i64>() > max_input {
                continue;
            }
            let mut shifted = m;
            shifted[i] += q as u32;
            let Some(src) = w.index_of(&shifted) else {
                return Err(Error::WindowTooSmall(
                    "shifted monomial fell outside the window".into(),
                ));
            };
            // theta(x_i^q x^m) vs x_i^q theta(x^m)
            for row in 0..n {
                let lhs = theta.entry(row, src);
                let rhs = {
                    let u = w.monomial(row);
                    if u[i] < q as u32 {
                        0
                    } else {
                        let mut down = u.to_vec();
                        down[i] -= q as u32;
                        w.index_of(&down).map_or(0, |r| theta.entry(r, col))
                    }
                };
                if lhs % p != rhs % p {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
