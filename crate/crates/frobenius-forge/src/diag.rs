//! The diagonalizable-group engine: pushforward decompositions over a
//! torus or finite diagonal action, closure iteration for detecting
//! finite F-representation type, the strongly-critical enumeration that
//! cross-checks it, and assembly of the multiplicity matrix.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::dynamics::MultiplicityMatrix;
use crate::error::{Error, Result};
use crate::intmat;
use crate::lattice::{Character, WeightSystem};
use crate::monomial::{class_of_degree, CanonicalKey, CovariantClass, DecompositionReport};

/// Default cap on q^d (and on the degree-distribution support).
pub const DEFAULT_CELL_BUDGET: u64 = 1_000_000_000;

/// Default cap on closure rounds.
pub const DEFAULT_CLOSURE_BUDGET: u32 = 64;

/// Distribution of the degree shift `deg x^v` over all residue tuples
/// `v` in `[0, q)^d`, built one variable at a time. The support stays
/// small even when q^d is large, which keeps decomposition counts cheap.
fn shift_distribution(ws: &WeightSystem, q: u64, budget: u64) -> Result<BTreeMap<Character, u64>> {
    let d = ws.num_vars() as u32;
    let cells = (q as u128).checked_pow(d).filter(|&c| c <= budget as u128);
    if cells.is_none() {
        return Err(Error::BudgetExceeded(format!(
            "q^d = {q}^{d} exceeds the cell budget {budget}"
        )));
    }
    let mut dist: BTreeMap<Character, u64> = BTreeMap::new();
    dist.insert(ws.grading().zero_character(), 1);
    for weight in ws.weights() {
        let mut next: BTreeMap<Character, u64> = BTreeMap::new();
        for v in 0..q {
            let step = weight.scale(v as i64, ws.grading());
            for (tau, count) in &dist {
                let key = tau.add(&step, ws.grading());
                *next.entry(key).or_insert(0) += count;
            }
            if next.len() as u64 > budget {
                return Err(Error::BudgetExceeded(format!(
                    "degree-shift support exceeds the budget {budget}"
                )));
            }
        }
        dist = next;
    }
    Ok(dist)
}

/// Decompose the e-th pushforward of `base` into covariant classes.
///
/// Every residue tuple contributes either a class (aggregated by
/// canonical key, so isomorphic pieces merge) or an empty piece. The
/// conservation identity `sum of multiplicities + empty pieces = q^d`
/// is checked before the report is returned.
pub fn pushforward_decompose(
    ws: &WeightSystem,
    base: &CovariantClass,
    e: u32,
    budget: u64,
) -> Result<DecompositionReport> {
    if e == 0 {
        return Err(Error::Input(
            "pushforward exponent e must be at least 1".into(),
        ));
    }
    let q = ws
        .prime()
        .checked_pow(e)
        .ok_or_else(|| Error::BudgetExceeded("p^e overflows".into()))?;
    let dist = shift_distribution(ws, q, budget)?;
    let mut entries: BTreeMap<CanonicalKey, (CovariantClass, u64)> = BTreeMap::new();
    let mut zero_piece_count = 0u64;
    for (tau, count) in dist {
        let beta = base
            .degree()
            .sub_character(&tau, ws.grading())
            .divide(q, ws.grading())?;
        match class_of_degree(ws, &beta, ws.degree_bound())? {
            None => zero_piece_count += count,
            Some(class) => {
                entries
                    .entry(class.key().clone())
                    .and_modify(|(existing, mult)| {
                        *mult += count;
                        // Isomorphic pieces with shifted degrees merge;
                        // keep the smaller degree as the label.
                        if class.degree() < existing.degree() {
                            *existing = class.clone();
                        }
                    })
                    .or_insert((class, count));
            }
        }
    }
    let report = DecompositionReport {
        e,
        q,
        entries,
        zero_piece_count,
    };
    report.check_conservation(ws.num_vars())?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FfrtVerdict {
    /// The one-step closure reached a fixed point.
    Ffrt,
    /// The round budget ran out first; nothing is claimed.
    Inconclusive,
}

/// The classes reachable from the unit class under one-step
/// pushforward decomposition, in canonical key order.
#[derive(Debug, Clone)]
pub struct Closure {
    pub classes: Vec<CovariantClass>,
    pub verdict: FfrtVerdict,
    pub rounds: u32,
}

impl Closure {
    pub fn index_of_unit(&self, ws: &WeightSystem) -> usize {
        self.classes
            .iter()
            .position(|c| c.is_unit(ws))
            .expect("closure always contains the unit class")
    }

    pub fn index_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.classes.iter().position(|c| c.key() == key)
    }
}

/// Fixed-point iteration: start from the unit class, decompose every
/// newly seen class at e = 1, and stop when a round adds nothing.
pub fn closure_classes(ws: &WeightSystem, round_budget: u32, cell_budget: u64) -> Result<Closure> {
    if round_budget == 0 {
        return Err(Error::Input(
            "closure budget must be at least 1 round".into(),
        ));
    }
    let mut known: BTreeMap<CanonicalKey, CovariantClass> = BTreeMap::new();
    let unit = CovariantClass::unit(ws);
    known.insert(unit.key().clone(), unit.clone());
    let mut pending = vec![unit];
    let mut rounds = 0u32;
    let mut verdict = FfrtVerdict::Inconclusive;
    while rounds < round_budget {
        rounds += 1;
        let mut found = Vec::new();
        for class in &pending {
            let report = pushforward_decompose(ws, class, 1, cell_budget)?;
            for (key, (class, _)) in report.entries {
                if let std::collections::btree_map::Entry::Vacant(e) = known.entry(key) {
                    e.insert(class.clone());
                    found.push(class);
                }
            }
        }
        if found.is_empty() {
            verdict = FfrtVerdict::Ffrt;
            break;
        }
        pending = found;
    }
    Ok(Closure {
        classes: known.into_values().collect(),
        verdict,
        rounds,
    })
}

/// All classes of lattice characters in the half-open weight zonotope
/// that pass the strongly-critical test and lie in the support of the
/// ambient ring. Classes are labeled by their characters, with the
/// convention that the class of `chi` is the monomial module of fine
/// degree `chi` (so pushforward labels match directly).
pub fn strongly_critical_classes(
    ws: &WeightSystem,
    candidate_budget: u64,
) -> Result<Vec<CovariantClass>> {
    let r = ws.grading().free_rank();
    let mut lo = vec![0i64; r];
    let mut hi = vec![0i64; r];
    for w in ws.weights() {
        for k in 0..r {
            let a = w.free[k];
            if a > 0 {
                lo[k] -= a;
            } else {
                hi[k] -= a;
            }
        }
    }
    let mut volume: u64 = 1;
    for k in 0..r {
        volume = volume.saturating_mul((hi[k] - lo[k] + 1) as u64);
    }
    for &m in ws.grading().torsion_orders() {
        volume = volume.saturating_mul(m);
    }
    if volume > candidate_budget {
        return Err(Error::BudgetExceeded(format!(
            "zonotope enumeration of {volume} candidates exceeds budget {candidate_budget}"
        )));
    }

    let mut classes: BTreeMap<CanonicalKey, CovariantClass> = BTreeMap::new();
    let mut free = lo.clone();
    loop {
        let mut torsion = vec![0i64; ws.grading().torsion_orders().len()];
        loop {
            let chi = ws.grading().character(free.clone(), torsion.clone())?;
            if ws.is_strongly_critical(&chi) && ws.in_supp(&chi) {
                let beta = chi.to_rational();
                let class = class_of_degree(ws, &beta, ws.degree_bound())?.ok_or_else(|| {
                    Error::Internal(format!("support member {chi} produced an empty class"))
                })?;
                classes
                    .entry(class.key().clone())
                    .and_modify(|existing| {
                        if class.degree() < existing.degree() {
                            *existing = class.clone();
                        }
                    })
                    .or_insert(class);
            }
            // advance torsion odometer
            let mut j = 0;
            loop {
                if j == torsion.len() {
                    break;
                }
                torsion[j] += 1;
                if torsion[j] < ws.grading().torsion_orders()[j] as i64 {
                    break;
                }
                torsion[j] = 0;
                j += 1;
            }
            if j == torsion.len() {
                break;
            }
        }
        // advance free odometer
        let mut k = 0;
        loop {
            if k == r {
                break;
            }
            free[k] += 1;
            if free[k] <= hi[k] {
                break;
            }
            free[k] = lo[k];
            k += 1;
        }
        if k == r {
            break;
        }
    }
    Ok(classes.into_values().collect())
}

/// Direct e-step multiplicity of `target` in the pushforward of `base`,
/// by residue enumeration with no matrix powering. This is the oracle
/// side of the composition law.
pub fn multiplicity_direct(
    ws: &WeightSystem,
    e: u32,
    target: &CovariantClass,
    base: &CovariantClass,
    budget: u64,
) -> Result<u64> {
    let report = pushforward_decompose(ws, base, e, budget)?;
    Ok(report.multiplicity_of(target.key()))
}

/// Build the one-step multiplicity matrix over the closure classes in
/// canonical order. Requires an FFRT closure.
pub fn multiplicity_matrix(
    ws: &WeightSystem,
    closure: &Closure,
    cell_budget: u64,
) -> Result<MultiplicityMatrix> {
    if closure.verdict != FfrtVerdict::Ffrt {
        return Err(Error::NotFfrt);
    }
    let n = closure.classes.len();
    let mut entries = vec![vec![0u64; n]; n];
    for (j, class) in closure.classes.iter().enumerate() {
        let report = pushforward_decompose(ws, class, 1, cell_budget)?;
        for (key, (_, mult)) in &report.entries {
            let i = closure.index_of(key).ok_or_else(|| {
                Error::Internal(format!(
                    "class {key} appears in a pushforward but not in the closure"
                ))
            })?;
            entries[i][j] = *mult;
        }
    }
    let labels: Vec<String> = closure
        .classes
        .iter()
        .map(|c| c.key().to_string())
        .collect();
    let ranks = vec![1u64; n];
    let mut matrix = MultiplicityMatrix::new(entries, labels, ranks, ws.prime(), ws.krull_dim())?;
    let (checkable, note) = rank_identity_status(ws);
    matrix.rank_identity_checkable = checkable;
    matrix.rank_identity_note = note;
    Ok(matrix)
}

/// Whether the rank/column-sum identity is expected to hold exactly:
/// the degree-zero semigroup must span a full-rank sublattice of the
/// weight kernel whose quotient torsion is prime to p.
pub fn rank_identity_status(ws: &WeightSystem) -> (bool, Option<String>) {
    let hilbert = match ws.degree_zero_hilbert_basis() {
        Ok(h) => h,
        Err(_) => {
            return (
                false,
                Some("degree-zero Hilbert basis search did not complete".into()),
            )
        }
    };
    let lattice_rows: Vec<Vec<i64>> = hilbert
        .iter()
        .map(|x| x.iter().map(|&v| v as i64).collect())
        .collect();
    let rank = intmat::rank(&lattice_rows);
    if rank != ws.krull_dim() {
        return (
            false,
            Some(format!(
                "degree-zero semigroup spans rank {rank} but the Krull dimension is {}",
                ws.krull_dim()
            )),
        );
    }
    let factors = intmat::invariant_factors(&lattice_rows);
    for f in &factors {
        if let Some(f64v) = f.to_u64() {
            if f64v > 1 && f64v % ws.prime() == 0 {
                return (
                    false,
                    Some(format!(
                        "p = {} divides the invariant factor {f64v} of the degree-zero lattice",
                        ws.prime()
                    )),
                );
            }
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GradingGroup;

    fn quadric_cone(p: u64) -> WeightSystem {
        let g = GradingGroup::new(0, vec![2]).unwrap();
        let w = g.character(vec![], vec![1]).unwrap();
        WeightSystem::new(g, vec![w.clone(), w], p, None).unwrap()
    }

    fn segre(p: u64) -> WeightSystem {
        let g = GradingGroup::new(1, vec![]).unwrap();
        let ws: Vec<_> = [1i64, 1, -1, -1]
            .iter()
            .map(|&x| g.character(vec![x], vec![]).unwrap())
            .collect();
        WeightSystem::new(g, ws, p, None).unwrap()
    }

    fn trivial(d: usize, p: u64) -> WeightSystem {
        let g = GradingGroup::new(0, vec![]).unwrap();
        let w = g.zero_character();
        WeightSystem::new(g, vec![w; d], p, None).unwrap()
    }

    #[test]
    fn regular_baseline_decomposition() {
        for p in [2u64, 3, 5] {
            for d in 1..=3usize {
                for e in 1..=2u32 {
                    let ws = trivial(d, p);
                    let unit = CovariantClass::unit(&ws);
                    let report = pushforward_decompose(&ws, &unit, e, DEFAULT_CELL_BUDGET).unwrap();
                    assert_eq!(report.entries.len(), 1);
                    assert_eq!(report.zero_piece_count, 0);
                    let (_, mult) = report.entries.values().next().unwrap();
                    assert_eq!(*mult, p.pow(e * d as u32));
                }
            }
        }
    }

    #[test]
    fn quadric_cone_decomposition() {
        let ws = quadric_cone(3);
        let unit = CovariantClass::unit(&ws);
        let report = pushforward_decompose(&ws, &unit, 1, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(report.zero_piece_count, 0);
        let mults: Vec<u64> = report.entries.values().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![5, 4]);
    }

    #[test]
    fn segre_decomposition_with_zero_pieces() {
        let ws = segre(2);
        let unit = CovariantClass::unit(&ws);
        let report = pushforward_decompose(&ws, &unit, 1, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(report.zero_piece_count, 8);
        let mults: Vec<u64> = report.entries.values().map(|(_, m)| *m).collect();
        assert_eq!(mults.iter().sum::<u64>(), 8);
        assert_eq!(report.multiplicity_of(unit.key()), 6);
    }

    #[test]
    fn closure_examples() {
        let trivial_closure = closure_classes(&trivial(2, 3), 8, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(trivial_closure.verdict, FfrtVerdict::Ffrt);
        assert_eq!(trivial_closure.classes.len(), 1);

        let quadric_closure = closure_classes(&quadric_cone(3), 8, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(quadric_closure.verdict, FfrtVerdict::Ffrt);
        assert_eq!(quadric_closure.classes.len(), 2);

        let segre_closure = closure_classes(&segre(2), 8, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(segre_closure.verdict, FfrtVerdict::Ffrt);
        assert_eq!(segre_closure.classes.len(), 3);
    }

    #[test]
    fn strongly_critical_matches_closure_for_segre() {
        for p in [2u64, 3] {
            let ws = segre(p);
            let closure = closure_classes(&ws, 8, DEFAULT_CELL_BUDGET).unwrap();
            let critical = strongly_critical_classes(&ws, 1_000_000).unwrap();
            let closure_keys: Vec<_> = closure.classes.iter().map(|c| c.key().clone()).collect();
            let critical_keys: Vec<_> = critical.iter().map(|c| c.key().clone()).collect();
            assert_eq!(closure_keys, critical_keys);
        }
    }

    #[test]
    fn strongly_critical_quadric_both_residues() {
        let ws = quadric_cone(3);
        let critical = strongly_critical_classes(&ws, 1_000_000).unwrap();
        assert_eq!(critical.len(), 2);
    }

    #[test]
    fn strongly_critical_trivial() {
        let ws = trivial(2, 3);
        let critical = strongly_critical_classes(&ws, 1_000_000).unwrap();
        assert_eq!(critical.len(), 1);
    }

    #[test]
    fn quadric_multiplicity_matrix() {
        let ws = quadric_cone(3);
        let closure = closure_classes(&ws, 8, DEFAULT_CELL_BUDGET).unwrap();
        let m = multiplicity_matrix(&ws, &closure, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(*m.entries(), vec![vec![5, 4], vec![4, 5]]);
        assert!(m.rank_identity_checkable);
        m.verify_rank_eigenvector().unwrap();
    }

    #[test]
    fn trivial_matrix_is_p_to_d() {
        let ws = trivial(2, 3);
        let closure = closure_classes(&ws, 8, DEFAULT_CELL_BUDGET).unwrap();
        let m = multiplicity_matrix(&ws, &closure, DEFAULT_CELL_BUDGET).unwrap();
        assert_eq!(*m.entries(), vec![vec![9]]);
    }

    #[test]
    fn segre_column_sums_are_p_cubed() {
        for p in [2u64, 3] {
            let ws = segre(p);
            let closure = closure_classes(&ws, 8, DEFAULT_CELL_BUDGET).unwrap();
            let m = multiplicity_matrix(&ws, &closure, DEFAULT_CELL_BUDGET).unwrap();
            for j in 0..m.size() {
                let col: u64 = (0..m.size()).map(|i| m.entries()[i][j]).sum();
                assert_eq!(col, p.pow(3), "column {j} at p = {p}");
            }
            m.verify_rank_eigenvector().unwrap();
        }
    }

    #[test]
    fn multiplicity_direct_examples() {
        let ws = quadric_cone(3);
        let closure = closure_classes(&ws, 8, DEFAULT_CELL_BUDGET).unwrap();
        let unit = CovariantClass::unit(&ws);
        let odd = closure
            .classes
            .iter()
            .find(|c| !c.is_unit(&ws))
            .unwrap()
            .clone();
        assert_eq!(
            multiplicity_direct(&ws, 2, &unit, &unit, DEFAULT_CELL_BUDGET).unwrap(),
            41
        );
        assert_eq!(
            multiplicity_direct(&ws, 1, &odd, &unit, DEFAULT_CELL_BUDGET).unwrap(),
            4
        );
        assert!(multiplicity_direct(&ws, 1, &unit, &unit, DEFAULT_CELL_BUDGET).unwrap() >= 1);
    }

    #[test]
    fn budget_guard_fires() {
        let ws = quadric_cone(3);
        let unit = CovariantClass::unit(&ws);
        assert!(matches!(
            pushforward_decompose(&ws, &unit, 1, 4),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn rank_identity_checkable_on_fixtures() {
        assert!(rank_identity_status(&quadric_cone(3)).0);
        assert!(rank_identity_status(&segre(2)).0);
        assert!(rank_identity_status(&trivial(3, 5)).0);
    }

    #[test]
    fn degenerate_positive_weights_flagged_unchecked() {
        // All-positive weights give a zero-dimensional invariant ring;
        // the degree-zero lattice has rank 0 < krull_dim formula value.
        let g = GradingGroup::new(1, vec![]).unwrap();
        let ws = WeightSystem::new(
            g.clone(),
            vec![
                g.character(vec![2], vec![]).unwrap(),
                g.character(vec![3], vec![]).unwrap(),
            ],
            5,
            None,
        )
        .unwrap();
        let (ok, note) = rank_identity_status(&ws);
        assert!(!ok);
        assert!(note.unwrap().contains("rank"));
    }
}
