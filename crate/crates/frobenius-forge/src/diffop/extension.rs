//! Module-finite ring extensions presented by structure constants over a
//! polynomial base, and their trace-form discriminants.
//!
//! The trace of multiplication by each product r_i * r_j is computed in
//! the regular representation with polynomial entries; the discriminant
//! is the determinant of that matrix, expanded exactly. No fraction-field
//! inversion is ever needed.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

type Rat = BigRational;

/// Coefficient domain: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffField {
    Rational,
    Prime(u64),
}

impl CoeffField {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffField::Rational => 0,
            CoeffField::Prime(p) => *p,
        }
    }
}

/// A coefficient in the chosen domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Rat(Rat),
    Fp { v: u64, p: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2, "mixed prime fields");
                Coeff::Fp {
                    v: (a + b) % p,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient domains"),
        }
    }

    fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2, "mixed prime fields");
                Coeff::Fp {
                    v: a * b % p,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient domains"),
        }
    }

    fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Fp { v, p } => Coeff::Fp {
                v: (p - v % p) % p,
                p: *p,
            },
        }
    }
}

/// Sparse multivariate polynomial with deterministic term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: CoeffField,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl Poly {
    pub fn zero(field: CoeffField) -> Poly {
        Poly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: CoeffField, n: i64, nvars: usize) -> Poly {
        let mut p = Poly::zero(field);
        p.add_term(vec![0; nvars], coeff_from_int(field, n));
        p
    }

    pub fn monomial(field: CoeffField, exps: Vec<u32>, c: Coeff) -> Poly {
        let mut p = Poly::zero(field);
        p.add_term(exps, c);
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca.mul(cb));
            }
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.field);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    /// Evaluate at integer sample points (for the congruence checks).
    pub fn eval_i64(&self, point: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = match c {
                Coeff::Rat(x) => x.clone(),
                Coeff::Fp { v, .. } => Rat::from(BigInt::from(*v)),
            };
            for (exp, &x) in e.iter().zip(point) {
                for _ in 0..*exp {
                    term *= Rat::from(BigInt::from(x));
                }
            }
            acc += term;
        }
        acc
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let coeff_str = match c {
                Coeff::Rat(x) => x.to_string(),
                Coeff::Fp { v, .. } => v.to_string(),
            };
            let mut factors = Vec::new();
            for (k, &exp) in e.iter().enumerate() {
                match exp.cmp(&1) {
                    Ordering::Less => {}
                    Ordering::Equal => factors.push(vars[k].clone()),
                    Ordering::Greater => factors.push(format!("{}^{}", vars[k], exp)),
                }
            }
            let body = if factors.is_empty() {
                coeff_str
            } else if coeff_str == "1" {
                factors.join("*")
            } else if coeff_str == "-1" {
                format!("-{}", factors.join("*"))
            } else {
                format!("{}*{}", coeff_str, factors.join("*"))
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (i, part) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(part);
            } else if let Some(stripped) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nvars = self.terms.keys().next().map_or(0, |e| e.len());
        let vars: Vec<String> = (0..nvars).map(|i| format!("t{i}")).collect();
        write!(f, "{}", self.render(&vars))
    }
}

fn coeff_from_int(field: CoeffField, n: i64) -> Coeff {
    match field {
        CoeffField::Rational => Coeff::Rat(Rat::from(BigInt::from(n))),
        CoeffField::Prime(p) => Coeff::Fp {
            v: n.rem_euclid(p as i64) as u64,
            p,
        },
    }
}

fn coeff_from_ratio(field: CoeffField, n: i64, d: i64) -> Result<Coeff> {
    match field {
        CoeffField::Rational => Ok(Coeff::Rat(Rat::new(BigInt::from(n), BigInt::from(d)))),
        CoeffField::Prime(p) => {
            let dv = d.rem_euclid(p as i64) as u64;
            let inv = mod_inverse(dv, p).ok_or_else(|| {
                Error::Input(format!("denominator {d} is not invertible mod {p}"))
            })?;
            Ok(Coeff::Fp {
                v: n.rem_euclid(p as i64) as u64 * inv % p,
                p,
            })
        }
    }
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

/// Parse a polynomial over the named variables: terms joined by +/-,
/// factors joined by *, powers with ^, integer or a/b coefficients.
pub fn parse_poly(input: &str, vars: &[String], field: CoeffField) -> Result<Poly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Input("empty polynomial".into()));
    }
    let bytes = s.as_bytes();
    let n = bytes.len();
    let mut i = 0;
    let mut out = Poly::zero(field);
    let mut first = true;
    while i < n {
        let mut sign = 1i64;
        match bytes[i] {
            b'+' => i += 1,
            b'-' => {
                sign = -1;
                i += 1;
            }
            _ if first => {}
            _ => {
                return Err(Error::Input(format!(
                    "expected '+' or '-' at position {i} in '{input}'"
                )))
            }
        }
        first = false;
        let mut coeff = coeff_from_int(field, sign);
        let mut exps = vec![0u32; vars.len()];
        let mut any_factor = false;
        loop {
            if i < n && bytes[i].is_ascii_digit() {
                let start = i;
                while i < n && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: i64 = s[start..i]
                    .parse()
                    .map_err(|_| Error::Input(format!("bad number in '{input}'")))?;
                let c = if i < n && bytes[i] == b'/' {
                    i += 1;
                    let ds = i;
                    while i < n && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let denom: i64 = s[ds..i]
                        .parse()
                        .map_err(|_| Error::Input(format!("bad denominator in '{input}'")))?;
                    if denom == 0 {
                        return Err(Error::Input("zero denominator".into()));
                    }
                    coeff_from_ratio(field, numer, denom)?
                } else {
                    coeff_from_int(field, numer)
                };
                coeff = coeff.mul(&c);
                any_factor = true;
            } else if i < n && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                let start = i;
                while i < n && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &s[start..i];
                let idx = vars.iter().position(|v| v == name).ok_or_else(|| {
                    Error::Input(format!("unknown variable '{name}' in '{input}'"))
                })?;
                let mut power = 1u32;
                if i < n && bytes[i] == b'^' {
                    i += 1;
                    let ps = i;
                    while i < n && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ps == i {
                        return Err(Error::Input(format!("missing exponent in '{input}'")));
                    }
                    power = s[ps..i]
                        .parse()
                        .map_err(|_| Error::Input(format!("bad exponent in '{input}'")))?;
                }
                exps[idx] += power;
                any_factor = true;
            } else {
                break;
            }
            if i < n && bytes[i] == b'*' {
                i += 1;
            } else {
                break;
            }
        }
        if !any_factor {
            return Err(Error::Input(format!(
                "expected a term at position {i} in '{input}'"
            )));
        }
        out.add_term(exps, coeff);
    }
    Ok(out)
}

/// A module-finite extension of a polynomial base ring, presented by a
/// basis r_1 = 1, ..., r_n and structure constants in the base.
#[derive(Debug, Clone)]
pub struct RingExtensionPresentation {
    pub base_vars: Vec<String>,
    pub field: CoeffField,
    pub basis_size: usize,
    /// products[i][j][k] = coefficient of r_k in r_i * r_j.
    pub products: Vec<Vec<Vec<Poly>>>,
}

impl RingExtensionPresentation {
    pub fn new(
        base_vars: Vec<String>,
        field: CoeffField,
        basis_size: usize,
        products: Vec<Vec<Vec<Poly>>>,
    ) -> Result<RingExtensionPresentation> {
        let n = basis_size;
        if n == 0 {
            return Err(Error::Input("basis must be nonempty".into()));
        }
        if products.len() != n
            || products.iter().any(|r| r.len() != n)
            || products.iter().flatten().any(|e| e.len() != n)
        {
            return Err(Error::Input(
                "structure constants must form an n x n x n array".into(),
            ));
        }
        let ext = RingExtensionPresentation {
            base_vars,
            field,
            basis_size,
            products,
        };
        ext.validate()?;
        Ok(ext)
    }

    fn validate(&self) -> Result<()> {
        let n = self.basis_size;
        let nvars = self.base_vars.len();
        // r_1 is the identity.
        for j in 0..n {
            for k in 0..n {
                let expected = if j == k {
                    Poly::constant(self.field, 1, nvars)
                } else {
                    Poly::zero(self.field)
                };
                if self.products[0][j][k] != expected {
                    return Err(Error::Input(format!(
                        "r_1 must be the identity: r_1 * r_{} is wrong",
                        j + 1
                    )));
                }
            }
        }
        // commutativity
        for i in 0..n {
            for j in 0..i {
                if self.products[i][j] != self.products[j][i] {
                    return Err(Error::Input(format!(
                        "structure constants are not commutative at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        // associativity: (r_i r_j) r_k = r_i (r_j r_k)
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = vec![Poly::zero(self.field); n];
                    for (m, c) in self.products[i][j].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (l, d) in self.products[m][k].iter().enumerate() {
                            lhs[l] = lhs[l].add(&c.mul(d));
                        }
                    }
                    let mut rhs = vec![Poly::zero(self.field); n];
                    for (m, c) in self.products[j][k].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (l, d) in self.products[i][m].iter().enumerate() {
                            rhs[l] = rhs[l].add(&c.mul(d));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Input(format!(
                            "structure constants are not associative at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Trace of multiplication by r_i * r_j in the regular representation.
    fn trace_of_product(&self, i: usize, j: usize) -> Poly {
        let n = self.basis_size;
        let mut tr = Poly::zero(self.field);
        // r_i r_j = sum_m c_m r_m; trace(mult by r_m) at basis slot l is
        // the r_l coefficient of r_m r_l.
        for (m, c) in self.products[i][j].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for l in 0..n {
                tr = tr.add(&c.mul(&self.products[m][l][l]));
            }
        }
        tr
    }

    /// The n x n trace-form matrix (trace(r_i r_j)).
    pub fn trace_matrix(&self) -> Vec<Vec<Poly>> {
        let n = self.basis_size;
        (0..n)
            .map(|i| (0..n).map(|j| self.trace_of_product(i, j)).collect())
            .collect()
    }

    /// The discriminant: determinant of the trace form. A zero result is
    /// reported as a flag (the extension is not generically separable),
    /// not an error.
    pub fn discriminant(&self) -> Discriminant {
        let m = self.trace_matrix();
        let det = determinant(&m, self.field);
        Discriminant {
            is_zero: det.is_zero(),
            poly: det,
        }
    }
}

/// Discriminant outcome; `is_zero` flags a non-generically-separable
/// presentation.
#[derive(Debug, Clone)]
pub struct Discriminant {
    pub poly: Poly,
    pub is_zero: bool,
}

/// Cofactor-expansion determinant; the matrices here are tiny.
pub fn determinant(m: &[Vec<Poly>], field: CoeffField) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(field, 1, 0);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(field);
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = determinant(&minor, field);
        let term = top.mul(&sub);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}
