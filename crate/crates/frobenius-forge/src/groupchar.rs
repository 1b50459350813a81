//! The finite-group engine, for group orders prime to the
//! characteristic: truncation characters of the quotient by Frobenius
//! powers, Frobenius twists as Galois maps on character values, and
//! decomposition of pushforwards into covariant components indexed by
//! the irreducible representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::dynamics::MultiplicityMatrix;
use crate::error::{Error, Result};

type Rat = BigRational;

/// One conjugacy class: its size and the exponents of the eigenvalues
/// zeta^(a_j) of a class representative acting on W.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassData {
    pub size: u64,
    pub eigenvalue_exponents: Vec<u64>,
}

/// Character table: one row of exact cyclotomic values per irreducible,
/// columns indexed by the conjugacy classes. Row orthogonality is
/// verified on load and the first row must be the trivial character.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub rows: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
}

/// A class function with exact cyclotomic values.
pub type ClassFunction = Vec<Cyclotomic>;

/// Everything the engine needs about one group action.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub field: CyclotomicField,
    pub classes: Vec<ConjugacyClassData>,
    pub table: CharacterTable,
    pub prime: u64,
    pub names: Vec<String>,
}

impl GroupData {
    pub fn new(
        m: u64,
        classes: Vec<ConjugacyClassData>,
        rows: Vec<Vec<Cyclotomic>>,
        prime: u64,
        names: Option<Vec<String>>,
    ) -> Result<GroupData> {
        let field = CyclotomicField::new(m);
        if num_integer::gcd(prime, m) != 1 {
            return Err(Error::Input(format!(
                "characteristic {prime} must be prime to the eigenvalue conductor {m}"
            )));
        }
        if classes.is_empty() {
            return Err(Error::Input("at least one conjugacy class required".into()));
        }
        let dim_w = classes[0].eigenvalue_exponents.len();
        if classes
            .iter()
            .any(|c| c.eigenvalue_exponents.len() != dim_w)
        {
            return Err(Error::Input(
                "all classes must list the same number of eigenvalue exponents".into(),
            ));
        }
        if classes[0].size != 1 || classes[0].eigenvalue_exponents.iter().any(|&a| a % m != 0) {
            return Err(Error::Input(
                "the first class must be the identity: size 1, all eigenvalue exponents 0".into(),
            ));
        }
        let order: u64 = classes.iter().map(|c| c.size).sum();
        if order.is_multiple_of(prime) {
            return Err(Error::Input(format!(
                "characteristic {prime} divides the group order {order}"
            )));
        }
        let n = classes.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input(format!(
                "character table must be {n} x {n} to match the classes"
            )));
        }
        // First row: trivial character.
        if rows[0]
            .iter()
            .any(|v| field.as_rational(v) != Some(Rat::one()))
        {
            return Err(Error::Input(
                "the first table row must be the trivial character".into(),
            ));
        }
        // Row orthogonality, exactly.
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for c in 0..n {
                    let term = field.mul(&rows[i][c], &field.conj(&rows[j][c]));
                    let term = field.scale(&term, &Rat::from(BigInt::from(classes[c].size)));
                    acc = field.add(&acc, &term);
                }
                let expected = if i == j {
                    Rat::from(BigInt::from(order))
                } else {
                    Rat::zero()
                };
                if field.as_rational(&acc) != Some(expected) {
                    return Err(Error::Input(format!(
                        "character table rows {i} and {j} fail orthogonality"
                    )));
                }
            }
        }
        // Degrees: values at the identity class.
        let mut degrees = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let v = field.as_rational(&row[0]).ok_or_else(|| {
                Error::Input(format!("row {i} has a non-rational degree at the identity"))
            })?;
            if !v.is_integer() || !v.is_positive() {
                return Err(Error::Input(format!("row {i} has non-positive degree {v}")));
            }
            degrees.push(
                u64::try_from(v.to_integer())
                    .map_err(|_| Error::Input(format!("degree of row {i} does not fit in u64")))?,
            );
        }
        let names = names.unwrap_or_else(|| (0..n).map(|i| format!("U{i}")).collect());
        if names.len() != n {
            return Err(Error::Input(
                "irreducible names must match the table rows".into(),
            ));
        }
        Ok(GroupData {
            field,
            classes,
            table: CharacterTable { rows, degrees },
            prime,
            names,
        })
    }

    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn dim_w(&self) -> usize {
        self.classes[0].eigenvalue_exponents.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

/// The character of the length-q truncation: at a class with eigenvalue
/// exponents a_j, the value is the product over j of the geometric sums
/// 1 + zeta^(a_j) + ... + zeta^(a_j (q-1)), computed exactly.
pub fn truncation_character(gd: &GroupData, q: u64) -> ClassFunction {
    let f = &gd.field;
    let m = f.modulus();
    gd.classes
        .iter()
        .map(|class| {
            let mut value = f.one();
            for &a in &class.eigenvalue_exponents {
                let factor = if a % m == 0 {
                    f.from_rational(Rat::from(BigInt::from(q)))
                } else {
                    // Exponents a*t mod m cycle with period m / gcd(a, m).
                    let ord = m / num_integer::gcd(a, m);
                    let full = q / ord;
                    let rem = q % ord;
                    let mut sum = f.zero();
                    for t in 0..ord {
                        let count = full + if t < rem { 1 } else { 0 };
                        if count > 0 {
                            let term = f.scale(
                                &f.zeta_pow((a as i64 % m as i64) * (t as i64)),
                                &Rat::from(BigInt::from(count)),
                            );
                            sum = f.add(&sum, &term);
                        }
                    }
                    sum
                };
                value = f.mul(&value, &factor);
            }
            value
        })
        .collect()
}

/// Frobenius twist on class functions: apply the Galois map
/// z -> z^t with t * p^e = 1 (mod m) to every value.
pub fn frobenius_twist(gd: &GroupData, cf: &ClassFunction, e: u32) -> Result<ClassFunction> {
    let m = gd.field.modulus();
    if e == 0 || m == 1 {
        return Ok(cf.clone());
    }
    let mut pe = 1u64;
    for _ in 0..e {
        pe = (pe * (gd.prime % m)) % m;
    }
    let t = mod_inverse(pe, m)
        .ok_or_else(|| Error::Input(format!("p^e = {pe} is not invertible modulo {m}")))?;
    cf.iter().map(|v| gd.field.galois(v, t)).collect()
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
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

/// Inner-product decomposition of a class function into irreducible
/// multiplicities. Every multiplicity must come out a nonnegative
/// rational integer; anything else signals inconsistent input.
pub fn decompose_into_irreducibles(gd: &GroupData, cf: &ClassFunction) -> Result<Vec<u64>> {
    let f = &gd.field;
    let order = Rat::from(BigInt::from(gd.order()));
    let n = gd.num_classes();
    let mut mults = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = f.zero();
        for (c, value) in cf.iter().enumerate() {
            let term = f.mul(value, &f.conj(&gd.table.rows[i][c]));
            let term = f.scale(&term, &Rat::from(BigInt::from(gd.classes[c].size)));
            acc = f.add(&acc, &term);
        }
        let value = f.as_rational(&acc).map(|v| v / &order).ok_or_else(|| {
            Error::NonIntegralMultiplicity {
                index: i,
                value: f.render(&acc),
            }
        })?;
        if !value.is_integer() || value.is_negative() {
            return Err(Error::NonIntegralMultiplicity {
                index: i,
                value: value.to_string(),
            });
        }
        mults.push(u64::try_from(value.to_integer()).map_err(|_| {
            Error::NonIntegralMultiplicity {
                index: i,
                value: value.to_string(),
            }
        })?);
    }
    Ok(mults)
}

/// Multiplicities of the covariant components R(U_i) in the e-th
/// pushforward: decompose the twisted truncation character.
pub fn pushforward_multiplicities(gd: &GroupData, e: u32) -> Result<Vec<u64>> {
    let q = gd
        .prime
        .checked_pow(e)
        .ok_or_else(|| Error::BudgetExceeded("p^e overflows".into()))?;
    let trunc = truncation_character(gd, q);
    let twisted = frobenius_twist(gd, &trunc, e)?;
    let mults = decompose_into_irreducibles(gd, &twisted)?;
    // Weighted conservation: the truncation has dimension q^(dim W).
    let total: u128 = mults
        .iter()
        .zip(&gd.table.degrees)
        .map(|(&m, &d)| m as u128 * d as u128)
        .sum();
    let expected = (q as u128).pow(gd.dim_w() as u32);
    if total != expected {
        return Err(Error::Internal(format!(
            "dimension count {total} != q^dim W = {expected} in group pushforward"
        )));
    }
    Ok(mults)
}

/// One-step multiplicity column: the multiplicity of each U_i in the
/// pushforward of the covariant component of U_j, read off from the
/// twisted product of the truncation character with the character of U_j.
pub fn group_step_column(gd: &GroupData, j: usize) -> Result<Vec<u64>> {
    let q = gd.prime;
    let trunc = truncation_character(gd, q);
    let product: ClassFunction = trunc
        .iter()
        .zip(&gd.table.rows[j])
        .map(|(a, b)| gd.field.mul(a, b))
        .collect();
    let twisted = frobenius_twist(gd, &product, 1)?;
    decompose_into_irreducibles(gd, &twisted)
}

/// The multiplicity matrix over the irreducibles reachable from the
/// trivial one under the one-step map, with ranks given by the degrees.
pub fn group_multiplicity_matrix(gd: &GroupData) -> Result<MultiplicityMatrix> {
    let n = gd.num_classes();
    let mut columns: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut reachable = vec![false; n];
    reachable[0] = true;
    let mut frontier = vec![0usize];
    while let Some(j) = frontier.pop() {
        let col = group_step_column(gd, j)?;
        for (i, &m) in col.iter().enumerate() {
            if m > 0 && !reachable[i] {
                reachable[i] = true;
                frontier.push(i);
            }
        }
        columns[j] = Some(col);
    }
    let indices: Vec<usize> = (0..n).filter(|&i| reachable[i]).collect();
    let size = indices.len();
    let mut entries = vec![vec![0u64; size]; size];
    for (jj, &j) in indices.iter().enumerate() {
        let col = columns[j].as_ref().expect("reachable columns are computed");
        for (ii, &i) in indices.iter().enumerate() {
            entries[ii][jj] = col[i];
        }
    }
    let labels: Vec<String> = indices.iter().map(|&i| gd.names[i].clone()).collect();
    let ranks: Vec<u64> = indices.iter().map(|&i| gd.table.degrees[i]).collect();
    MultiplicityMatrix::new(entries, labels, ranks, gd.prime, gd.dim_w())
}

/// Group data for the cyclic group Z/m acting with the given eigenvalue
/// exponents for a fixed generator. Convenience for fixtures and the
/// cross-engine checks against the diagonal engine.
pub fn cyclic_group(m: u64, exponents: &[u64], prime: u64) -> Result<GroupData> {
    let field = CyclotomicField::new(m);
    let classes: Vec<ConjugacyClassData> = (0..m)
        .map(|k| ConjugacyClassData {
            size: 1,
            eigenvalue_exponents: exponents.iter().map(|&a| (a * k) % m).collect(),
        })
        .collect();
    let rows: Vec<Vec<Cyclotomic>> = (0..m)
        .map(|i| (0..m).map(|k| field.zeta_pow((i * k % m) as i64)).collect())
        .collect();
    GroupData::new(m, classes, rows, prime, None)
}
