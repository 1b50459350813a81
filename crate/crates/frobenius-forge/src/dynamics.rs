//! Multiplicity-matrix dynamics: primitivity within the Wielandt bound,
//! exact Perron data certified against the rank vector, limit
//! multiplicities by exact rational powering, the positivity pattern
//! implied by strong F-regularity, minimal finite-dimensional
//! representation bounds, and semisimple block structure of pushforward
//! endomorphism rings.

#![allow(clippy::needless_range_loop)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Rat = BigRational;

/// The one-step multiplicity matrix: entry (i, j) counts class-i summands
/// in the pushforward of class j. Ranks ride along as the certified left
/// eigenvector candidate.
#[derive(Debug, Clone)]
pub struct MultiplicityMatrix {
    entries: Vec<Vec<u64>>,
    labels: Vec<String>,
    ranks: Vec<u64>,
    p: u64,
    dim: usize,
    /// Whether the rank/column-sum identity is expected to be checkable
    /// for this input, plus a note naming the obstruction when not.
    pub rank_identity_checkable: bool,
    pub rank_identity_note: Option<String>,
}

impl MultiplicityMatrix {
    pub fn new(
        entries: Vec<Vec<u64>>,
        labels: Vec<String>,
        ranks: Vec<u64>,
        p: u64,
        dim: usize,
    ) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::Input("multiplicity matrix must be square".into()));
        }
        if labels.len() != n || ranks.len() != n {
            return Err(Error::Input("labels/ranks must match matrix size".into()));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::Input("class labels must be distinct".into()));
        }
        if ranks.contains(&0) {
            return Err(Error::Input("ranks must be positive".into()));
        }
        Ok(MultiplicityMatrix {
            entries,
            labels,
            ranks,
            p,
            dim,
            rank_identity_checkable: true,
            rank_identity_note: None,
        })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Vec<Vec<u64>> {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The dominant eigenvalue candidate p^dim.
    pub fn lambda(&self) -> BigUint {
        BigUint::from(self.p).pow(self.dim as u32)
    }

    /// Wielandt bound (n-1)^2 + 1 on the primitivity exponent.
    pub fn wielandt_bound(&self) -> usize {
        let n = self.size();
        (n - 1) * (n - 1) + 1
    }

    /// Exact e-th power with big-integer entries.
    pub fn power(&self, e: u32) -> Vec<Vec<BigUint>> {
        let n = self.size();
        let base: Vec<Vec<BigUint>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigUint::from(x)).collect())
            .collect();
        let mut acc: Vec<Vec<BigUint>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for _ in 0..e {
            acc = mat_mul(&acc, &base);
        }
        acc
    }

    /// Column `j` of the e-th power, i.e. the multiplicities of every
    /// class in the e-step pushforward of class j.
    pub fn power_column(&self, e: u32, j: usize) -> Vec<BigUint> {
        let n = self.size();
        let mut col: Vec<BigUint> = (0..n)
            .map(|i| {
                if i == j {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        for _ in 0..e {
            let mut next = vec![BigUint::zero(); n];
            for (i, slot) in next.iter_mut().enumerate() {
                for k in 0..n {
                    if self.entries[i][k] != 0 && !col[k].is_zero() {
                        *slot += BigUint::from(self.entries[i][k]) * &col[k];
                    }
                }
            }
            col = next;
        }
        col
    }

    /// Smallest u within the Wielandt bound with E^u entrywise positive.
    pub fn primitivity(&self) -> Option<usize> {
        let n = self.size();
        let base: Vec<bool> = self
            .entries
            .iter()
            .flat_map(|row| row.iter().map(|&x| x > 0))
            .collect();
        let mut acc = base.clone();
        for u in 1..=self.wielandt_bound() {
            if acc.iter().all(|&b| b) {
                return Some(u);
            }
            acc = bool_mul(&acc, &base, n);
        }
        None
    }

    /// Exact verification that the rank vector is a left eigenvector for
    /// p^dim: `ranks · E = p^dim · ranks` in big-integer arithmetic.
    pub fn verify_rank_eigenvector(&self) -> Result<()> {
        let lambda = BigInt::from(self.lambda());
        for j in 0..self.size() {
            let lhs: BigInt = (0..self.size())
                .map(|i| BigInt::from(self.ranks[i]) * BigInt::from(self.entries[i][j]))
                .sum();
            let rhs = &lambda * BigInt::from(self.ranks[j]);
            if lhs != rhs {
                let note = self
                    .rank_identity_note
                    .clone()
                    .unwrap_or_else(|| "torsion orders interacting with p, or a weight system whose degree-zero lattice is not full in the kernel".into());
                return Err(Error::EigenCheckFailed(format!(
                    "rank identity fails at column {} ({}): weighted column sum {} != {} ; suspected cause: {}",
                    j, self.labels[j], lhs, rhs, note
                )));
            }
        }
        Ok(())
    }

    /// Certified Perron data: exact eigenvector check plus the limit of
    /// (E / p^dim)^e by repeated squaring in exact rationals, iterated
    /// until successive iterates differ by less than `tolerance`.
    pub fn perron(&self, tolerance: &Rat) -> Result<PerronData> {
        let Some(u) = self.primitivity() else {
            return Err(Error::NotPrimitive {
                bound: self.wielandt_bound(),
            });
        };
        self.verify_rank_eigenvector()?;
        let lambda = BigInt::from(self.lambda());
        let mut a: Vec<Vec<Rat>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| Rat::new(BigInt::from(x), lambda.clone()))
                    .collect()
            })
            .collect();
        let mut doublings = 0u32;
        loop {
            let next = rat_mat_mul(&a, &a);
            let diff = max_abs_diff(&next, &a);
            a = next;
            doublings += 1;
            if diff < *tolerance {
                break;
            }
            if doublings > 64 {
                return Err(Error::BudgetExceeded(
                    "limit powering did not converge within 64 doublings".into(),
                ));
            }
        }
        let positive = a.iter().all(|row| row.iter().all(|x| x.is_positive()));
        if !positive {
            return Err(Error::Internal(
                "limit matrix of a primitive matrix has a nonpositive entry".into(),
            ));
        }
        Ok(PerronData {
            lambda: self.lambda(),
            left_eigenvector: self.ranks.clone(),
            limit: a,
            primitivity_exponent: u,
            doublings,
            verified: true,
        })
    }

    /// The positivity pattern that strong F-regularity implies: some
    /// power E^u has the unit class's row and column strictly positive.
    /// This is a necessary-condition certificate; it never claims the
    /// converse implication.
    pub fn sfr_positivity_certificate(&self, index_of_unit: usize) -> SfrCertificate {
        let n = self.size();
        let bound = self.wielandt_bound();
        let base: Vec<bool> = self
            .entries
            .iter()
            .flat_map(|row| row.iter().map(|&x| x > 0))
            .collect();
        let mut acc = base.clone();
        for u in 1..=bound {
            let row_ok = (0..n).all(|j| acc[index_of_unit * n + j]);
            let col_ok = (0..n).all(|i| acc[i * n + index_of_unit]);
            if row_ok && col_ok {
                return SfrCertificate::CertifiedPositivity { exponent: u };
            }
            acc = bool_mul(&acc, &base, n);
        }
        SfrCertificate::Failed { bound }
    }

    /// The sequence u_e = min over classes appearing in the e-step
    /// pushforward of the unit class of d(M) * m(e, M, unit), and its
    /// running supremum: the minimal dimension of a finite-dimensional
    /// representation of the limit endomorphism ring.
    pub fn min_findim_sequence(
        &self,
        index_of_unit: usize,
        e_max: u32,
        division_dims: Option<&[u64]>,
    ) -> Result<MinFindimReport> {
        let n = self.size();
        let default_d = vec![1u64; n];
        let d = division_dims.unwrap_or(&default_d);
        if d.len() != n {
            return Err(Error::Input(format!(
                "{} division-algebra dimensions for {} classes",
                d.len(),
                n
            )));
        }
        let mut col: Vec<BigUint> = (0..n)
            .map(|i| {
                if i == index_of_unit {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        let mut seq = Vec::new();
        let mut sup = BigUint::zero();
        for e in 1..=e_max {
            let mut next = vec![BigUint::zero(); n];
            for (i, slot) in next.iter_mut().enumerate() {
                for k in 0..n {
                    if self.entries[i][k] != 0 && !col[k].is_zero() {
                        *slot += BigUint::from(self.entries[i][k]) * &col[k];
                    }
                }
            }
            col = next;
            let u_e = col
                .iter()
                .enumerate()
                .filter(|(_, m)| !m.is_zero())
                .map(|(i, m)| m * BigUint::from(d[i]))
                .min()
                .ok_or_else(|| Error::Internal("pushforward column is entirely zero".into()))?;
            if u_e > sup {
                sup = u_e.clone();
            }
            seq.push((e, u_e));
        }
        let verdict = if self.primitivity().is_some() {
            MinFindimVerdict::NoFiniteDimensionalReps
        } else {
            MinFindimVerdict::Inconclusive {
                observed_sup: sup.clone(),
            }
        };
        Ok(MinFindimReport {
            sequence: seq,
            sup,
            verdict,
        })
    }
}

/// Certified spectral data for a primitive multiplicity matrix.
#[derive(Debug, Clone)]
pub struct PerronData {
    pub lambda: BigUint,
    pub left_eigenvector: Vec<u64>,
    pub limit: Vec<Vec<Rat>>,
    pub primitivity_exponent: usize,
    pub doublings: u32,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SfrCertificate {
    CertifiedPositivity { exponent: usize },
    Failed { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinFindimVerdict {
    NoFiniteDimensionalReps,
    Inconclusive { observed_sup: BigUint },
}

#[derive(Debug, Clone)]
pub struct MinFindimReport {
    pub sequence: Vec<(u32, BigUint)>,
    pub sup: BigUint,
    pub verdict: MinFindimVerdict,
}

/// One matrix block of the semisimple quotient of an endomorphism ring.
#[derive(Debug, Clone)]
pub struct SemisimpleBlock {
    pub label: String,
    pub multiplicity: u64,
    pub division_dim: u64,
    /// Dimension of the corresponding simple module.
    pub simple_dim: u64,
}

/// The semisimple quotient of End(^e R) as a product of matrix rings:
/// one block M(a_i, D_i) per class, with simple modules of dimension
/// a_i * d_i, and the maximal ideals described by which diagonal block
/// is forced to contain only non-invertible entries.
pub fn semisimple_block_report(
    multiplicities: &[(String, u64)],
    division_dims: Option<&[u64]>,
) -> Result<Vec<SemisimpleBlock>> {
    let default_d = vec![1u64; multiplicities.len()];
    let d = division_dims.unwrap_or(&default_d);
    if d.len() != multiplicities.len() {
        return Err(Error::Input(
            "division dims do not match block count".into(),
        ));
    }
    let mut blocks = Vec::new();
    for ((label, a), &di) in multiplicities.iter().zip(d) {
        if *a == 0 {
            return Err(Error::Input(format!("block {label} has multiplicity 0")));
        }
        blocks.push(SemisimpleBlock {
            label: label.clone(),
            multiplicity: *a,
            division_dim: di,
            simple_dim: a * di,
        });
    }
    Ok(blocks)
}

fn mat_mul(a: &[Vec<BigUint>], b: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let n = a.len();
    let mut out = vec![vec![BigUint::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    let prod = &a[i][k] * &b[k][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

fn rat_mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    let prod = &a[i][k] * &b[k][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

fn max_abs_diff(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Rat {
    let mut best = Rat::zero();
    for (ra, rb) in a.iter().zip(b) {
        for (xa, xb) in ra.iter().zip(rb) {
            let d = (xa - xb).abs();
            if d > best {
                best = d;
            }
        }
    }
    best
}

fn bool_mul(a: &[bool], b: &[bool], n: usize) -> Vec<bool> {
    let mut out = vec![false; n * n];
    for i in 0..n {
        for k in 0..n {
            if a[i * n + k] {
                for j in 0..n {
                    if b[k * n + j] {
                        out[i * n + j] = true;
                    }
                }
            }
        }
    }
    out
}

/// Display helper: an exact rational as a decimal with enough digits for
/// report output. Exactness is preserved internally; this is formatting.
pub fn rat_to_decimal(x: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (x * Rat::from(scale.clone())).round().to_integer();
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let s = abs.to_string();
    let s = if s.len() <= digits as usize {
        format!("0.{}{}", "0".repeat(digits as usize - s.len()), s)
    } else {
        let (int, frac) = s.split_at(s.len() - digits as usize);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

/// Parse a tolerance given either as a decimal like `1e-9`/`0.000001`
/// or as a fraction `1/1000000000`.
pub fn parse_tolerance(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad_tol(s))?;
        let d: BigInt = den.trim().parse().map_err(|_| bad_tol(s))?;
        if d.is_zero() {
            return Err(bad_tol(s));
        }
        return Ok(Rat::new(n, d));
    }
    let lower = s.to_ascii_lowercase();
    let (mantissa, exp) = match lower.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i32>().map_err(|_| bad_tol(s))?),
        None => (lower.clone(), 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i.to_string(), f.to_string()),
        None => (mantissa.clone(), String::new()),
    };
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = digits.parse().map_err(|_| bad_tol(s))?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    Ok(if shift >= 0 {
        Rat::from(n * ten.pow(shift as u32))
    } else {
        Rat::new(n, ten.pow((-shift) as u32))
    })
}

fn bad_tol(s: &str) -> Error {
    Error::Input(format!("cannot parse tolerance '{s}'"))
}
