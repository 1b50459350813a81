//! Summand classes of Frobenius pushforwards as monomial modules.
//!
//! A class is the span of all monomials of one fine degree, recorded by
//! its minimal generating exponents over the degree-zero semigroup. Two
//! classes are isomorphic (allowing degree shifts) exactly when their
//! generator sets are translates of each other, so each class carries a
//! translation-normalized canonical key.

use std::collections::BTreeMap;
use std::fmt;

use crate::diophantine::SearchLimits;
use crate::error::{Error, Result};
use crate::lattice::{RationalCharacter, WeightSystem};

/// Generator set translated so each coordinate's minimum is zero,
/// sorted lexicographically. Equal keys mean isomorphic classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<Vec<u64>>);

impl CanonicalKey {
    fn from_generators(generators: &[Vec<u64>]) -> CanonicalKey {
        if generators.is_empty() {
            return CanonicalKey(Vec::new());
        }
        let d = generators[0].len();
        let mins: Vec<u64> = (0..d)
            .map(|i| generators.iter().map(|g| g[i]).min().expect("nonempty"))
            .collect();
        let mut translated: Vec<Vec<u64>> = generators
            .iter()
            .map(|g| g.iter().zip(&mins).map(|(a, b)| a - b).collect())
            .collect();
        translated.sort();
        CanonicalKey(translated)
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .0
            .iter()
            .map(|g| {
                let coords: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                format!("({})", coords.join(","))
            })
            .collect();
        write!(f, "{{{}}}", gens.join(" "))
    }
}

/// One Krull–Schmidt summand class: the monomial module of a fine degree,
/// with its minimal generator exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariantClass {
    degree: RationalCharacter,
    generators: Vec<Vec<u64>>,
    key: CanonicalKey,
}

impl CovariantClass {
    fn new(degree: RationalCharacter, mut generators: Vec<Vec<u64>>) -> CovariantClass {
        generators.sort();
        let key = CanonicalKey::from_generators(&generators);
        CovariantClass {
            degree,
            generators,
            key,
        }
    }

    /// The class of the invariant ring itself (degree zero, generated by 1).
    pub fn unit(ws: &WeightSystem) -> CovariantClass {
        CovariantClass::new(
            ws.grading().zero_character().to_rational(),
            vec![vec![0; ws.num_vars()]],
        )
    }

    pub fn degree(&self) -> &RationalCharacter {
        &self.degree
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn key(&self) -> &CanonicalKey {
        &self.key
    }

    pub fn is_unit(&self, ws: &WeightSystem) -> bool {
        self.generators.len() == 1 && self.generators[0] == vec![0; ws.num_vars()]
    }
}

/// Degree-shift-tolerant isomorphism of classes over one weight system:
/// generator sets agree up to translation.
pub fn iso_test(a: &CovariantClass, b: &CovariantClass) -> bool {
    a.key == b.key
}

/// Minimal generators of the monomial module of degree `beta`: the
/// monomials of that degree not divisible by a nonzero degree-zero
/// monomial. Exact lattice search; `degree_cutoff` only guards runaway
/// inputs, and exhausting it is an error rather than a silent truncation.
pub fn minimal_generators(
    ws: &WeightSystem,
    beta: &RationalCharacter,
    degree_cutoff: u64,
) -> Result<Vec<Vec<u64>>> {
    let Some(chi) = beta.to_integral() else {
        return Ok(Vec::new());
    };
    let limits = SearchLimits {
        degree_weights: Some(ws.var_degrees().to_vec()),
        degree_cutoff,
        node_budget: Some(5_000_000),
        truncation_flag_var: None,
    };
    let out = ws.minimal_monomials(&chi, &limits);
    if !out.complete {
        return Err(Error::FrontierInconclusive(format!(
            "generator search for degree {beta} cut off at weighted degree {degree_cutoff}"
        )));
    }
    Ok(out.solutions)
}

/// The class of degree `beta`, or `None` when no monomial has that degree.
pub fn class_of_degree(
    ws: &WeightSystem,
    beta: &RationalCharacter,
    degree_cutoff: u64,
) -> Result<Option<CovariantClass>> {
    let gens = minimal_generators(ws, beta, degree_cutoff)?;
    if gens.is_empty() {
        return Ok(None);
    }
    Ok(Some(CovariantClass::new(beta.clone(), gens)))
}

/// The summand of the e-th pushforward of `base` selected by the residue
/// tuple `v` in `[0, q)^d`: monomials `m` of the base class with
/// `m = q m' + v`, recorded as the class of the untwisted degree
/// `(deg(base) - sum v_i w_i) / q`. Returns `None` for an empty piece.
pub fn class_of_residue(
    ws: &WeightSystem,
    base: &CovariantClass,
    v: &[u64],
    e: u32,
) -> Result<Option<CovariantClass>> {
    if v.len() != ws.num_vars() {
        return Err(Error::Input(format!(
            "residue tuple has {} entries for {} variables",
            v.len(),
            ws.num_vars()
        )));
    }
    let q = ws.prime().pow(e);
    if v.iter().any(|&vi| vi >= q) {
        return Err(Error::Input(format!(
            "residue entries must lie in [0, {q})"
        )));
    }
    let beta = residue_degree(ws, base.degree(), v, q)?;
    class_of_degree(ws, &beta, ws.degree_bound())
}

/// The untwisted degree of the residue piece: `(beta - deg x^v) / q`.
pub fn residue_degree(
    ws: &WeightSystem,
    base_degree: &RationalCharacter,
    v: &[u64],
    q: u64,
) -> Result<RationalCharacter> {
    let shift = ws.monomial_degree(v);
    base_degree
        .sub_character(&shift, ws.grading())
        .divide(q, ws.grading())
}

/// Multiset of summand classes of one pushforward, keyed canonically,
/// plus the count of empty residue pieces.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub e: u32,
    pub q: u64,
    pub entries: BTreeMap<CanonicalKey, (CovariantClass, u64)>,
    pub zero_piece_count: u64,
}

impl DecompositionReport {
    /// Conservation: multiplicities plus empty pieces account for every
    /// residue tuple.
    pub fn check_conservation(&self, num_vars: usize) -> Result<()> {
        let total: u64 =
            self.entries.values().map(|(_, m)| *m).sum::<u64>() + self.zero_piece_count;
        let expected = self
            .q
            .checked_pow(num_vars as u32)
            .ok_or_else(|| Error::Internal("q^d overflows u64".into()))?;
        if total != expected {
            return Err(Error::Internal(format!(
                "conservation failed: {total} pieces for q^d = {expected}"
            )));
        }
        Ok(())
    }

    pub fn multiplicity_of(&self, key: &CanonicalKey) -> u64 {
        self.entries.get(key).map_or(0, |(_, m)| *m)
    }
}
