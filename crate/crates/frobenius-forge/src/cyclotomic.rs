//! Exact arithmetic in the cyclotomic field Q(zeta_m).
//!
//! Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) reduced
//! modulo the m-th cyclotomic polynomial, with big-rational coefficients.
//! The reduced form is unique, so equality is coefficient equality, and
//! every Galois map z -> z^t (t prime to m) is a table lookup.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Rat = BigRational;

fn rat_i(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Dense polynomial product.
fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let prod = x * y;
                out[i + j] += prod;
            }
        }
    }
    out
}

/// Exact division, panicking on a nonzero remainder (used only for
/// x^n - 1 divided by products of cyclotomic polynomials).
fn poly_exact_div(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - dd] = c.clone();
        for (k, dcoef) in den.iter().enumerate() {
            let delta = &c * dcoef;
            rem[i - dd + k] -= delta;
        }
    }
    assert!(
        rem.iter().all(|x| x.is_zero()),
        "inexact polynomial division"
    );
    quot
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            out.push(i);
            if i != m / i {
                out.push(m / i);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Coefficients of the m-th cyclotomic polynomial, via recursive
/// division of x^m - 1 by the proper-divisor factors.
pub fn cyclotomic_polynomial(m: u64) -> Vec<Rat> {
    assert!(m >= 1);
    if m == 1 {
        return vec![rat_i(-1), rat_i(1)];
    }
    let mut num = vec![Rat::zero(); m as usize + 1];
    num[0] = rat_i(-1);
    num[m as usize] = rat_i(1);
    let mut quot = num;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        quot = poly_exact_div(&quot, &phi_d);
    }
    quot
}

/// The field Q(zeta_m) with precomputed reductions of z^k for k < m.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    m: u64,
    degree: usize,
    /// z^k reduced to the power basis, for k in 0..m.
    powers: Vec<Vec<Rat>>,
}

impl CyclotomicField {
    pub fn new(m: u64) -> CyclotomicField {
        assert!(m >= 1);
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        // Reduce successive powers: z^{k+1} = z * z^k, replacing z^degree
        // by the tail of -phi (phi is monic).
        let tail: Vec<Rat> = phi[..degree].iter().map(|c| -c.clone()).collect();
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(m as usize);
        let mut cur = vec![Rat::zero(); degree.max(1)];
        if degree > 0 {
            cur[0] = Rat::one();
        }
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by z
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rat::zero();
            if !top.is_zero() {
                for (i, t) in tail.iter().enumerate() {
                    let delta = &top * t;
                    cur[i] += delta;
                }
            }
        }
        CyclotomicField { m, degree, powers }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            coeffs: vec![Rat::zero(); self.degree.max(1)],
        }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_rational(Rat::one())
    }

    pub fn from_rational(&self, x: Rat) -> Cyclotomic {
        let mut c = self.zero();
        c.coeffs[0] = x;
        c
    }

    pub fn from_integer(&self, n: i64) -> Cyclotomic {
        self.from_rational(rat_i(n))
    }

    /// z^k for any integer exponent (reduced mod m).
    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        let k = k.rem_euclid(self.m as i64) as usize;
        Cyclotomic {
            coeffs: self.powers[k].clone(),
        }
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        if self.degree == 0 {
            // Q(zeta_1) = Q; everything lives in coefficient 0.
            return Cyclotomic {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        let mut out = vec![Rat::zero(); self.degree];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // k < 2*degree - 1 < 2m, so reduce via the power table.
            let basis = &self.powers[k % self.m as usize];
            let wrap = k / self.m as usize; // z^m = 1
            debug_assert!(wrap == 0 || self.m as usize <= k);
            for (i, b) in basis.iter().enumerate() {
                if !b.is_zero() {
                    let delta = &c * b;
                    out[i] += delta;
                }
            }
        }
        Cyclotomic { coeffs: out }
    }

    pub fn scale(&self, a: &Cyclotomic, s: &Rat) -> Cyclotomic {
        Cyclotomic {
            coeffs: a.coeffs.iter().map(|x| x * s).collect(),
        }
    }

    /// The Galois map z -> z^t; requires gcd(t, m) = 1.
    pub fn galois(&self, a: &Cyclotomic, t: u64) -> Result<Cyclotomic> {
        if num_integer::gcd(t, self.m) != 1 {
            return Err(Error::Input(format!(
                "galois exponent {t} is not prime to the conductor {}",
                self.m
            )));
        }
        if self.degree == 0 {
            return Ok(a.clone());
        }
        let mut out = vec![Rat::zero(); self.degree];
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = &self.powers[((k as u64 * t) % self.m) as usize];
            for (i, b) in image.iter().enumerate() {
                if !b.is_zero() {
                    let delta = c * b;
                    out[i] += delta;
                }
            }
        }
        Ok(Cyclotomic { coeffs: out })
    }

    /// Complex conjugation z -> z^(-1).
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        if self.m == 1 {
            return a.clone();
        }
        self.galois(a, self.m - 1).expect("m-1 is prime to m")
    }

    /// The rational value of `a` when it lies in Q.
    pub fn as_rational(&self, a: &Cyclotomic) -> Option<Rat> {
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn render(&self, a: &Cyclotomic) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs().to_string();
            let body = match k {
                0 => mag,
                1 if mag == "1" => "z".to_string(),
                1 => format!("{mag}z"),
                _ if mag == "1" => format!("z^{k}"),
                _ => format!("{mag}z^{k}"),
            };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!(
                    "{}{body}",
                    if c.is_negative() { " - " } else { " + " }
                ));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.concat()
        }
    }
}

/// An element of Q(zeta_m) in reduced power-basis form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Bare display without the field: raw coefficients.
        write!(
            f,
            "{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// Parse a cyclotomic expression in the variable `z`: integer or
/// fractional coefficients, `+`/`-`, powers like `z^4`, optional `*`.
pub fn parse_cyclotomic(field: &CyclotomicField, input: &str) -> Result<Cyclotomic> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Input("empty cyclotomic value".into()));
    }
    let bytes = s.as_bytes();
    let mut acc = field.zero();
    let mut i = 0usize;
    let mut sign = 1i64;
    let n = bytes.len();
    let mut first = true;
    while i < n {
        match bytes[i] {
            b'+' => {
                sign = 1;
                i += 1;
            }
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
        // coefficient
        let start = i;
        while i < n && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let had_digits = start != i;
        let mut numer: i64 = if had_digits {
            s[start..i]
                .parse()
                .map_err(|_| Error::Input(format!("bad integer in '{input}'")))?
        } else {
            1
        };
        numer *= sign;
        let mut denom: i64 = 1;
        if i < n && bytes[i] == b'/' {
            i += 1;
            let ds = i;
            while i < n && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if ds == i {
                return Err(Error::Input(format!("missing denominator in '{input}'")));
            }
            denom = s[ds..i]
                .parse()
                .map_err(|_| Error::Input(format!("bad denominator in '{input}'")))?;
            if denom == 0 {
                return Err(Error::Input("zero denominator".into()));
            }
        }
        if i < n && bytes[i] == b'*' {
            i += 1;
        }
        // optional z power
        let mut power: i64 = 0;
        let mut had_z = false;
        if i < n && (bytes[i] == b'z' || bytes[i] == b'Z') {
            i += 1;
            had_z = true;
            power = 1;
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
        }
        if !had_digits && !had_z {
            return Err(Error::Input(format!(
                "expected a term at position {i} in '{input}'"
            )));
        }
        let term = field.scale(
            &field.zeta_pow(power),
            &Rat::new(BigInt::from(numer), BigInt::from(denom)),
        );
        acc = field.add(&acc, &term);
        sign = 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |p: Vec<Rat>| -> Vec<i64> {
            p.iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn third_roots_sum_to_minus_one() {
        let f = CyclotomicField::new(3);
        let z = f.zeta_pow(1);
        let z2 = f.zeta_pow(2);
        let sum = f.add(&z, &z2);
        assert_eq!(f.as_rational(&sum), Some(rat_i(-1)));
    }

    #[test]
    fn truncation_identity_at_m3() {
        // (1 + z)(1 + z^2) = 1 after reduction by 1 + z + z^2 = 0.
        let f = CyclotomicField::new(3);
        let a = f.add(&f.one(), &f.zeta_pow(1));
        let b = f.add(&f.one(), &f.zeta_pow(2));
        let prod = f.mul(&a, &b);
        assert_eq!(f.as_rational(&prod), Some(rat_i(1)));
    }

    #[test]
    fn galois_and_conjugation() {
        let f = CyclotomicField::new(5);
        let z = f.zeta_pow(1);
        let z3 = f.galois(&z, 3).unwrap();
        assert_eq!(z3, f.zeta_pow(3));
        assert_eq!(f.conj(&z), f.zeta_pow(4));
        assert!(f.galois(&z, 5).is_err());
        // conjugation is an involution
        assert_eq!(f.conj(&f.conj(&z3)), z3);
    }

    #[test]
    fn galois_is_multiplicative() {
        let f = CyclotomicField::new(12);
        let a = f.add(&f.zeta_pow(1), &f.from_integer(2));
        let b = f.sub(&f.zeta_pow(5), &f.from_integer(1));
        let lhs = f.galois(&f.mul(&a, &b), 7).unwrap();
        let rhs = f.mul(&f.galois(&a, 7).unwrap(), &f.galois(&b, 7).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_root_is_minus_one() {
        let f = CyclotomicField::new(2);
        assert_eq!(f.as_rational(&f.zeta_pow(1)), Some(rat_i(-1)));
    }

    #[test]
    fn parser_round_trips() {
        let f = CyclotomicField::new(3);
        let v = parse_cyclotomic(&f, "1 - z - z^2").unwrap();
        assert_eq!(f.as_rational(&v), Some(rat_i(2)));
        let w = parse_cyclotomic(&f, "2*z + 1/2").unwrap();
        let expect = f.add(
            &f.scale(&f.zeta_pow(1), &rat_i(2)),
            &f.from_rational(Rat::new(1.into(), 2.into())),
        );
        assert_eq!(w, expect);
        assert!(parse_cyclotomic(&f, "").is_err());
        assert!(parse_cyclotomic(&f, "z^").is_err());
    }
}
