//! Witness search for operators sending the square of an invariant
//! monomial to 1.
//!
//! For each q = p^e up to the budget, locate the pushforward summand
//! containing the exponent 2c, and look for a map from that summand to
//! the invariant ring carrying x^(2c) to 1. Maps between these rank-one
//! fine-graded modules are multiplications by Laurent monomials, so the
//! generator-image system has at most one candidate solution: images
//! x^(g - m0) for each minimal generator g, where m0 is the untwisted
//! position of x^(2c). The candidate is valid exactly when every image
//! is a genuine monomial, and any witness returned is replayed on an
//! explicit window before it is trusted.

use crate::error::{Error, Result};
use crate::lattice::{RationalCharacter, WeightSystem};
use crate::monomial::{class_of_degree, residue_degree, CovariantClass};

/// A verified witness: at level q the operator projects onto the residue
/// summand of 2c and divides by x^(2c) in q-th-root coordinates.
#[derive(Debug, Clone)]
pub struct Witness {
    pub q: u64,
    pub e: u32,
    /// Residue of 2c mod q.
    pub residue: Vec<u64>,
    /// Untwisted position of x^(2c) in its summand: (2c - residue) / q.
    pub base_exponent: Vec<u64>,
    pub class_degree: RationalCharacter,
    /// Minimal generator -> image exponent (generator - base_exponent).
    pub generator_images: Vec<(Vec<u64>, Vec<u64>)>,
}

impl Witness {
    /// Apply the witness to an invariant monomial exponent: project to
    /// the residue class of 2c, then shift-divide. `None` means the
    /// monomial is killed.
    pub fn apply(&self, m: &[u64]) -> Result<Option<Vec<u64>>> {
        let congruent = m
            .iter()
            .zip(&self.residue)
            .all(|(&mi, &vi)| mi % self.q == vi % self.q);
        if !congruent {
            return Ok(None);
        }
        let untwisted: Vec<u64> = m
            .iter()
            .zip(&self.residue)
            .map(|(&mi, &vi)| (mi - vi) / self.q)
            .collect();
        let mut image = Vec::with_capacity(m.len());
        for (u, b) in untwisted.iter().zip(&self.base_exponent) {
            if u < b {
                return Err(Error::Internal(
                    "witness image has a negative exponent; the candidate was unsound".into(),
                ));
            }
            image.push(u - b);
        }
        Ok(Some(image))
    }
}

/// Search for a witness over q = p, p^2, ... up to `q_max`.
///
/// `c_exponent` must be the exponent vector of a (nonzero) invariant
/// monomial. Returns `None` when no q within the budget admits one.
pub fn dsimplicity_witness_search(
    ws: &WeightSystem,
    c_exponent: &[u64],
    q_max: u64,
) -> Result<Option<Witness>> {
    if c_exponent.len() != ws.num_vars() {
        return Err(Error::Input(format!(
            "c has {} exponents for {} variables",
            c_exponent.len(),
            ws.num_vars()
        )));
    }
    if !ws.monomial_degree(c_exponent).is_zero() {
        return Err(Error::Input(format!(
            "c = x^{c_exponent:?} is not an invariant monomial (degree {})",
            ws.monomial_degree(c_exponent)
        )));
    }
    let c2: Vec<u64> = c_exponent.iter().map(|&x| 2 * x).collect();
    let mut e = 0u32;
    loop {
        e += 1;
        let Some(q) = ws.prime().checked_pow(e).filter(|&q| q <= q_max) else {
            return Ok(None);
        };
        if let Some(witness) = witness_at_level(ws, &c2, q, e)? {
            replay(ws, &c2, &witness)?;
            return Ok(Some(witness));
        }
    }
}

fn witness_at_level(ws: &WeightSystem, c2: &[u64], q: u64, e: u32) -> Result<Option<Witness>> {
    let residue: Vec<u64> = c2.iter().map(|&x| x % q).collect();
    let base_exponent: Vec<u64> = c2
        .iter()
        .zip(&residue)
        .map(|(&x, &v)| (x - v) / q)
        .collect();
    let zero = ws.grading().zero_character().to_rational();
    let beta = residue_degree(ws, &zero, &residue, q)?;
    let class: CovariantClass = class_of_degree(ws, &beta, ws.degree_bound())
        .map_err(|err| match err {
            Error::FrontierInconclusive(msg) => Error::PresentationIncomplete(msg),
            other => other,
        })?
        .ok_or_else(|| {
            Error::Internal("the residue summand of an invariant monomial is empty".into())
        })?;
    // Solve for generator images: a map of fine-graded rank-one modules
    // is multiplication by a Laurent monomial, and sending x^(2c) to 1
    // pins it to x^(-m0). The system is solvable exactly when every
    // generator image x^(g - m0) has nonnegative exponents.
    let mut images = Vec::with_capacity(class.generators().len());
    for g in class.generators() {
        let mut img = Vec::with_capacity(g.len());
        for (gi, bi) in g.iter().zip(&base_exponent) {
            if gi < bi {
                return Ok(None);
            }
            img.push(gi - bi);
        }
        images.push((g.clone(), img));
    }
    Ok(Some(Witness {
        q,
        e,
        residue,
        base_exponent,
        class_degree: class.degree().clone(),
        generator_images: images,
    }))
}

/// Post-hoc soundness check: replay the witness on a sample window and
/// verify that it sends x^(2c) to 1 and commutes with multiplication by
/// q-th powers of the invariant-ring generators. The solver's output is
/// never trusted without this.
fn replay(ws: &WeightSystem, c2: &[u64], witness: &Witness) -> Result<()> {
    match witness.apply(c2)? {
        Some(image) if image.iter().all(|&x| x == 0) => {}
        other => {
            return Err(Error::Internal(format!(
                "witness does not send x^{c2:?} to 1 (got {other:?})"
            )))
        }
    }
    let hilbert = ws.degree_zero_hilbert_basis()?;
    // Sample invariant monomials: sums of at most two of {2c, lambda,
    // q*lambda} over the Hilbert basis.
    let mut samples: Vec<Vec<u64>> = vec![vec![0; ws.num_vars()], c2.to_vec()];
    for lam in &hilbert {
        samples.push(lam.clone());
        samples.push(lam.iter().map(|&x| witness.q * x).collect());
        samples.push(lam.iter().zip(c2).map(|(&x, &y)| x + y).collect());
    }
    for a in &hilbert {
        for b in &hilbert {
            samples.push(a.iter().zip(b).map(|(&x, &y)| x + y).collect());
        }
    }
    for m in &samples {
        for lam in &hilbert {
            let shifted: Vec<u64> = m
                .iter()
                .zip(lam)
                .map(|(&mi, &li)| mi + witness.q * li)
                .collect();
            let lhs = witness.apply(&shifted)?;
            let rhs = witness.apply(m)?.map(|img| {
                img.iter()
                    .zip(lam)
                    .map(|(&x, &l)| x + l)
                    .collect::<Vec<u64>>()
            });
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "witness fails q-th-power linearity at m = {m:?}, lambda = {lam:?}"
                )));
            }
        }
    }
    Ok(())
}
