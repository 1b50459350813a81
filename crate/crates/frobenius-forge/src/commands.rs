//! Command implementations shared by the CLI binary and the examples:
//! each one turns a parsed ring spec into a deterministic report.

use std::path::{Path, PathBuf};

use num_rational::BigRational;
use num_traits::Zero;

use crate::diag::{self, Closure, FfrtVerdict};
use crate::dynamics::{
    rat_to_decimal, semisimple_block_report, MinFindimVerdict, MultiplicityMatrix, SfrCertificate,
};
use crate::error::{Error, Result};
use crate::groupchar::{self, GroupData};
use crate::lattice::{RationalCharacter, WeightSystem};
use crate::monomial::CovariantClass;
use crate::report::Report;
use crate::ringspec::{OperatorSpec, RingSpec};

/// Options shared by the commands; every field has the CLI default.
#[derive(Debug, Clone)]
pub struct Options {
    pub e: u32,
    pub budget: u64,
    pub q_max: u64,
    pub tolerance: BigRational,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            e: 1,
            budget: 0,
            q_max: 0,
            tolerance: BigRational::new(1.into(), 1_000_000_000.into()),
            cache_dir: None,
        }
    }
}

impl Options {
    fn closure_rounds(&self) -> u32 {
        if self.budget == 0 {
            diag::DEFAULT_CLOSURE_BUDGET
        } else {
            self.budget.min(u32::MAX as u64) as u32
        }
    }

    fn cell_budget(&self) -> u64 {
        if self.budget == 0 {
            diag::DEFAULT_CELL_BUDGET
        } else {
            self.budget
        }
    }

    fn q_max_or_default(&self, p: u64) -> u64 {
        if self.q_max == 0 {
            p.saturating_pow(4)
        } else {
            self.q_max
        }
    }
}

fn class_rows(classes: &[CovariantClass]) -> Vec<Vec<String>> {
    classes
        .iter()
        .map(|c| {
            vec![
                c.key().to_string(),
                c.degree().to_string(),
                format!(
                    "{}",
                    c.generators()
                        .iter()
                        .map(|g| format!(
                            "({})",
                            g.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            ]
        })
        .collect()
}

/// Decompose the e-th pushforward of the ring into summand classes.
pub fn cmd_decompose(spec: &RingSpec, digest: &str, opts: &Options) -> Result<Report> {
    let mut report = Report::new("decompose", digest);
    match spec {
        RingSpec::Diagonal(d) => {
            let ws = &d.weights;
            let unit = CovariantClass::unit(ws);
            let dec = diag::pushforward_decompose(ws, &unit, opts.e, opts.cell_budget())?;
            report.put("ring-kind", "diagonal");
            report.put("p", ws.prime().to_string());
            report.put("e", dec.e.to_string());
            report.put("q", dec.q.to_string());
            report.put(
                "label-convention",
                "classes are the monomial modules of their listed degree; a pushforward piece at residue v is the class of degree -(deg x^v)/q",
            );
            let rows: Vec<Vec<String>> = dec
                .entries
                .values()
                .map(|(class, mult)| {
                    let mut row = class_rows(std::slice::from_ref(class)).remove(0);
                    row.push(mult.to_string());
                    row
                })
                .collect();
            report.put_table(
                "classes",
                vec![
                    "key".into(),
                    "degree".into(),
                    "generators".into(),
                    "multiplicity".into(),
                ],
                rows,
            );
            report.put("zero-pieces", dec.zero_piece_count.to_string());
            let total: u64 =
                dec.entries.values().map(|(_, m)| m).sum::<u64>() + dec.zero_piece_count;
            report.put(
                "conservation",
                format!("{total} pieces = q^d = {}", dec.q.pow(ws.num_vars() as u32)),
            );
        }
        RingSpec::Group(g) => {
            let gd = &g.group;
            let mults = groupchar::pushforward_multiplicities(gd, opts.e)?;
            report.put("ring-kind", "group");
            report.put("p", gd.prime.to_string());
            report.put("e", opts.e.to_string());
            report.put("group-order", gd.order().to_string());
            let rows: Vec<Vec<String>> = gd
                .names
                .iter()
                .zip(&gd.table.degrees)
                .zip(&mults)
                .map(|((name, deg), mult)| vec![name.clone(), deg.to_string(), mult.to_string()])
                .collect();
            report.put_table(
                "covariants",
                vec!["irreducible".into(), "dim".into(), "multiplicity".into()],
                rows,
            );
            let q = gd.prime.pow(opts.e);
            let weighted: u128 = mults
                .iter()
                .zip(&gd.table.degrees)
                .map(|(&m, &d)| m as u128 * d as u128)
                .sum();
            report.put(
                "conservation",
                format!(
                    "{weighted} = q^dimW = {}",
                    (q as u128).pow(gd.dim_w() as u32)
                ),
            );
        }
        RingSpec::Extension(_) => {
            return Err(Error::Input(
                "decompose needs a diagonal or group ring spec".into(),
            ))
        }
    }
    Ok(report)
}

fn closure_with_cache(
    ws: &WeightSystem,
    digest: &str,
    opts: &Options,
    report: &mut Report,
) -> Result<Closure> {
    let Some(dir) = &opts.cache_dir else {
        return diag::closure_classes(ws, opts.closure_rounds(), opts.cell_budget());
    };
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{digest}.closure"));
    if let Some(closure) = read_closure_cache(&path, ws)? {
        // One conservation check guards a stale or corrupted cache entry.
        let unit = CovariantClass::unit(ws);
        let dec = diag::pushforward_decompose(ws, &unit, 1, opts.cell_budget())?;
        let known: Vec<_> = closure.classes.iter().map(|c| c.key().clone()).collect();
        if dec.entries.keys().all(|k| known.contains(k)) {
            report.put("cache", "hit (re-verified by one conservation check)");
            return Ok(closure);
        }
        report.put("cache", "stale entry ignored");
    }
    let closure = diag::closure_classes(ws, opts.closure_rounds(), opts.cell_budget())?;
    write_closure_cache(&path, &closure)?;
    report.put("cache", "miss (stored)");
    Ok(closure)
}

fn write_closure_cache(path: &Path, closure: &Closure) -> Result<()> {
    let mut text = String::new();
    text.push_str(&format!(
        "verdict = {}\n",
        match closure.verdict {
            FfrtVerdict::Ffrt => "ffrt",
            FfrtVerdict::Inconclusive => "inconclusive",
        }
    ));
    text.push_str(&format!("rounds = {}\n", closure.rounds));
    for class in &closure.classes {
        text.push_str(&format!("degree = {}\n", class.degree()));
    }
    std::fs::write(path, text)?;
    Ok(())
}

fn read_closure_cache(path: &Path, ws: &WeightSystem) -> Result<Option<Closure>> {
    let Ok(text) = std::fs::read_to_string(path) else {
        return Ok(None);
    };
    let mut verdict = None;
    let mut rounds = 0u32;
    let mut classes = Vec::new();
    for line in text.lines() {
        let Some((key, value)) = line.split_once('=') else {
            continue;
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "verdict" => {
                verdict = match value {
                    "ffrt" => Some(FfrtVerdict::Ffrt),
                    "inconclusive" => Some(FfrtVerdict::Inconclusive),
                    _ => return Ok(None),
                }
            }
            "rounds" => rounds = value.parse().unwrap_or(0),
            "degree" => {
                let Some(beta) = parse_degree(value, ws) else {
                    return Ok(None);
                };
                match crate::monomial::class_of_degree(ws, &beta, ws.degree_bound())? {
                    Some(class) => classes.push(class),
                    None => return Ok(None),
                }
            }
            _ => {}
        }
    }
    let Some(verdict) = verdict else {
        return Ok(None);
    };
    if classes.is_empty() {
        return Ok(None);
    }
    classes.sort_by(|a, b| a.key().cmp(b.key()));
    Ok(Some(Closure {
        classes,
        verdict,
        rounds,
    }))
}

/// Parse a degree rendered as `(a/b,...,kt,...)` back into a character.
fn parse_degree(s: &str, ws: &WeightSystem) -> Option<RationalCharacter> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let r = ws.grading().free_rank();
    let sdim = ws.grading().torsion_orders().len();
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    if !inner.is_empty() {
        for part in inner.split(',') {
            if let Some(t) = part.strip_suffix('t') {
                torsion.push(t.parse().ok()?);
            } else {
                free.push(part.parse().ok()?);
            }
        }
    }
    if free.len() != r || torsion.len() != sdim {
        return None;
    }
    Some(RationalCharacter { free, torsion })
}

/// FFRT detection by closure iteration, with the strongly-critical
/// enumeration cross-check.
pub fn cmd_closure(spec: &RingSpec, digest: &str, opts: &Options) -> Result<Report> {
    let mut report = Report::new("closure", digest);
    match spec {
        RingSpec::Diagonal(d) => {
            let ws = &d.weights;
            let closure = closure_with_cache(ws, digest, opts, &mut report)?;
            report.put("ring-kind", "diagonal");
            report.put("p", ws.prime().to_string());
            report.put("rounds", closure.rounds.to_string());
            report.put(
                "verdict",
                match closure.verdict {
                    FfrtVerdict::Ffrt => "FFRT (closure reached a fixed point)",
                    FfrtVerdict::Inconclusive => "inconclusive (round budget exhausted)",
                },
            );
            report.put("class-count", closure.classes.len().to_string());
            report.put_table(
                "classes",
                vec!["key".into(), "degree".into(), "generators".into()],
                class_rows(&closure.classes),
            );
            report.put(
                "iso-caveat",
                "classes with distinct keys are distinct as graded modules up to shift; this tool does not decide whether they could still be isomorphic ungraded",
            );
            let critical = diag::strongly_critical_classes(ws, opts.cell_budget())?;
            let closure_keys: Vec<_> = closure.classes.iter().map(|c| c.key().clone()).collect();
            let critical_keys: Vec<_> = critical.iter().map(|c| c.key().clone()).collect();
            report.put("strongly-critical-count", critical.len().to_string());
            report.put(
                "strongly-critical-cross-check",
                if closure_keys == critical_keys {
                    "match: closure classes = strongly critical support classes".to_string()
                } else {
                    format!(
                        "MISMATCH: closure has {} classes, strongly critical enumeration has {}",
                        closure_keys.len(),
                        critical_keys.len()
                    )
                },
            );
            if closure.verdict == FfrtVerdict::Inconclusive {
                report.exit_code = 2;
            }
        }
        RingSpec::Group(g) => {
            let gd = &g.group;
            let matrix = groupchar::group_multiplicity_matrix(gd)?;
            report.put("ring-kind", "group");
            report.put("p", gd.prime.to_string());
            report.put("verdict", "FFRT (reachable irreducibles are finite)");
            report.put("class-count", matrix.size().to_string());
            let rows: Vec<Vec<String>> = matrix
                .labels()
                .iter()
                .zip(matrix.ranks())
                .map(|(l, r)| vec![l.clone(), r.to_string()])
                .collect();
            report.put_table(
                "covariant-components",
                vec!["irreducible".into(), "rank".into()],
                rows,
            );
            report.put(
                "component-caveat",
                "components are indexed by irreducibles; indecomposability of a single component is not asserted",
            );
        }
        RingSpec::Extension(_) => {
            return Err(Error::Input(
                "closure needs a diagonal or group ring spec".into(),
            ))
        }
    }
    Ok(report)
}

fn build_matrix(spec: &RingSpec, opts: &Options) -> Result<(MultiplicityMatrix, usize)> {
    match spec {
        RingSpec::Diagonal(d) => {
            let ws = &d.weights;
            let closure = diag::closure_classes(ws, opts.closure_rounds(), opts.cell_budget())?;
            let index = closure.index_of_unit(ws);
            let matrix = diag::multiplicity_matrix(ws, &closure, opts.cell_budget())?;
            Ok((matrix, index))
        }
        RingSpec::Group(g) => {
            let matrix = groupchar::group_multiplicity_matrix(&g.group)?;
            Ok((matrix, 0))
        }
        RingSpec::Extension(_) => Err(Error::Input(
            "this command needs a diagonal or group ring spec".into(),
        )),
    }
}

fn division_dims(spec: &RingSpec) -> Option<&[u64]> {
    match spec {
        RingSpec::Diagonal(d) => d.division_dims.as_deref(),
        RingSpec::Group(g) => g.division_dims.as_deref(),
        RingSpec::Extension(_) => None,
    }
}

fn matrix_table(matrix: &MultiplicityMatrix) -> (Vec<String>, Vec<Vec<String>>) {
    let mut headers = vec!["class".into()];
    headers.extend(matrix.labels().iter().cloned());
    let rows: Vec<Vec<String>> = matrix
        .entries()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut cells = vec![matrix.labels()[i].clone()];
            cells.extend(row.iter().map(|x| x.to_string()));
            cells
        })
        .collect();
    (headers, rows)
}

/// The one-step multiplicity matrix with the rank vector and the
/// column-sum check.
pub fn cmd_ematrix(spec: &RingSpec, digest: &str, opts: &Options) -> Result<Report> {
    let mut report = Report::new("ematrix", digest);
    let (matrix, _) = build_matrix(spec, opts)?;
    report.put("ring-kind", spec.kind_name());
    report.put("p", matrix.p().to_string());
    report.put("dim", matrix.dim().to_string());
    report.put("size", matrix.size().to_string());
    let (headers, rows) = matrix_table(&matrix);
    report.put_table("matrix", headers, rows);
    report.put(
        "ranks",
        matrix
            .ranks()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    if matrix.rank_identity_checkable {
        matrix.verify_rank_eigenvector()?;
        report.put(
            "column-check",
            format!(
                "rank-weighted column sums all equal p^dim = {} (exact)",
                matrix.lambda()
            ),
        );
    } else {
        report.put(
            "column-check",
            format!(
                "unchecked: {}",
                matrix
                    .rank_identity_note
                    .clone()
                    .unwrap_or_else(|| "rank identity not checkable".into())
            ),
        );
    }
    Ok(report)
}

/// Primitivity, exact Perron data, the strong-F-regularity positivity
/// certificate, minimal finite-dimensional representation bounds, and
/// the endomorphism block report.
pub fn cmd_certify(spec: &RingSpec, digest: &str, opts: &Options) -> Result<Report> {
    let mut report = Report::new("certify", digest);
    let (matrix, unit_index) = build_matrix(spec, opts)?;
    report.put("ring-kind", spec.kind_name());
    report.put("p", matrix.p().to_string());
    report.put("dim", matrix.dim().to_string());
    report.put("unit-class", matrix.labels()[unit_index].clone());

    match matrix.primitivity() {
        Some(u) => report.put(
            "primitivity",
            format!(
                "E^{u} is entrywise positive (bound {})",
                matrix.wielandt_bound()
            ),
        ),
        None => {
            report.put(
                "primitivity",
                format!(
                    "no positive power up to the Wielandt bound {}",
                    matrix.wielandt_bound()
                ),
            );
            report.exit_code = 2;
        }
    }

    let mut certified_positivity = false;
    match matrix.sfr_positivity_certificate(unit_index) {
        SfrCertificate::CertifiedPositivity { exponent } => {
            certified_positivity = true;
            report.put(
                "sfr-positivity",
                format!(
                    "CertifiedPositivity at u = {exponent}: the unit row and column of E^u are strictly positive. This is the pattern strong F-regularity implies; it is a necessary-condition certificate, not a proof of strong F-regularity."
                ),
            );
        }
        SfrCertificate::Failed { bound } => {
            report.put(
                "sfr-positivity",
                format!(
                    "Failed: no power up to u = {bound} makes the unit row and column positive"
                ),
            );
        }
    }

    if matrix.rank_identity_checkable {
        match matrix.perron(&opts.tolerance) {
            Ok(perron) => {
                report.put("perron-lambda", perron.lambda.to_string());
                report.put(
                    "perron-left-eigenvector",
                    perron
                        .left_eigenvector
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                report.put(
                    "perron-verified",
                    "rank vector is an exact left eigenvector for p^dim",
                );
                let rows: Vec<Vec<String>> = perron
                    .limit
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        let mut cells = vec![matrix.labels()[i].clone()];
                        cells.extend(row.iter().map(|x| rat_to_decimal(x, 9)));
                        cells
                    })
                    .collect();
                let mut headers = vec!["limit".into()];
                headers.extend(matrix.labels().iter().cloned());
                report.put_table("limit-matrix", headers, rows);
                report.put(
                    "limit-note",
                    format!(
                        "limit of E^e / p^(dim e) by exact squaring, displayed to 9 digits; {} doublings to tolerance",
                        perron.doublings
                    ),
                );
            }
            Err(Error::NotPrimitive { bound }) => {
                report.put(
                    "perron",
                    format!("skipped: matrix not primitive within bound {bound}"),
                );
                report.exit_code = 2;
            }
            Err(e) => return Err(e),
        }
    } else {
        report.put(
            "perron",
            format!(
                "unchecked: {}",
                matrix
                    .rank_identity_note
                    .clone()
                    .unwrap_or_else(|| "rank identity not checkable".into())
            ),
        );
        report.exit_code = 2;
    }

    let e_max = opts.e.max(2);
    let findim = matrix.min_findim_sequence(unit_index, e_max, division_dims(spec))?;
    let rows: Vec<Vec<String>> = findim
        .sequence
        .iter()
        .map(|(e, u)| vec![e.to_string(), u.to_string()])
        .collect();
    report.put_table("min-findim-sequence", vec!["e".into(), "u_e".into()], rows);
    report.put(
        "min-findim-verdict",
        match &findim.verdict {
            MinFindimVerdict::NoFiniteDimensionalReps => {
                "no finite-dimensional representations: the limit operator ring forces u_e to infinity".to_string()
            }
            MinFindimVerdict::Inconclusive { observed_sup } => {
                format!("inconclusive; observed sup = {observed_sup}")
            }
        },
    );

    // Block structure of End(^e R) modulo its radical at the requested e.
    let col = matrix.power_column(opts.e, unit_index);
    let mut mults: Vec<(String, u64)> = Vec::new();
    for (l, m) in matrix.labels().iter().zip(&col) {
        if m.is_zero() {
            continue;
        }
        let m = u64::try_from(m).map_err(|_| {
            Error::BudgetExceeded(format!("block multiplicity {m} does not fit in u64"))
        })?;
        mults.push((l.clone(), m));
    }
    let d_for_blocks: Option<Vec<u64>> = division_dims(spec).map(|d| {
        matrix
            .labels()
            .iter()
            .zip(d)
            .zip(&col)
            .filter(|((_, _), m)| !m.is_zero())
            .map(|((_, &di), _)| di)
            .collect()
    });
    let blocks = semisimple_block_report(&mults, d_for_blocks.as_deref())?;
    let rows: Vec<Vec<String>> = blocks
        .iter()
        .map(|b| {
            vec![
                format!("M({}, D_{})", b.multiplicity, b.label),
                b.label.clone(),
                b.multiplicity.to_string(),
                b.division_dim.to_string(),
                b.simple_dim.to_string(),
            ]
        })
        .collect();
    report.put_table(
        "semisimple-blocks",
        vec![
            "block".into(),
            "class".into(),
            "a_i".into(),
            "d_i".into(),
            "simple-dim".into(),
        ],
        rows,
    );
    report.put(
        "block-note",
        format!(
            "End(^{0}R) mod radical = product of the blocks; the i-th maximal ideal is the set of endomorphisms whose i-th diagonal block has only non-invertible entries",
            opts.e
        ),
    );

    let is_ffrt = matches!(spec, RingSpec::Group(_))
        || matches!(diag_closure_verdict(spec, opts)?, Some(FfrtVerdict::Ffrt));
    if is_ffrt && certified_positivity {
        report.put(
            "simplicity-note",
            "finite F-representation type holds and the positivity pattern is certified; for a strongly F-regular ring with finite F-representation type the ring of differential operators is a simple ring. The positivity certificate is the necessary direction only, so simplicity here is conditional on strong F-regularity.",
        );
    }
    Ok(report)
}

fn diag_closure_verdict(spec: &RingSpec, opts: &Options) -> Result<Option<FfrtVerdict>> {
    match spec {
        RingSpec::Diagonal(d) => {
            let closure =
                diag::closure_classes(&d.weights, opts.closure_rounds(), opts.cell_budget())?;
            Ok(Some(closure.verdict))
        }
        _ => Ok(None),
    }
}

/// Trace-form discriminant of a presented extension.
pub fn cmd_discriminant(spec: &RingSpec, digest: &str) -> Result<Report> {
    let RingSpec::Extension(e) = spec else {
        return Err(Error::Input(
            "discriminant needs an extension ring spec".into(),
        ));
    };
    let ext = &e.extension;
    let mut report = Report::new("discriminant", digest);
    report.put("ring-kind", "extension");
    report.put("characteristic", ext.field.characteristic().to_string());
    report.put("basis-size", ext.basis_size.to_string());
    let trace = ext.trace_matrix();
    let rows: Vec<Vec<String>> = trace
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut cells = vec![format!("r{}", i + 1)];
            cells.extend(row.iter().map(|p| p.render(&ext.base_vars)));
            cells
        })
        .collect();
    let mut headers = vec!["trace".into()];
    headers.extend((0..ext.basis_size).map(|j| format!("r{}", j + 1)));
    report.put_table("trace-matrix", headers, rows);
    let disc = ext.discriminant();
    report.put("discriminant", disc.poly.render(&ext.base_vars));
    if disc.is_zero {
        report.put(
            "flag",
            "ZeroDiscriminant: the extension is not generically separable; the discriminant test does not apply",
        );
        report.exit_code = 2;
    }
    Ok(report)
}

/// Order filtration of a truncated operator, with linearity checks over
/// rings of q-th powers.
pub fn cmd_order(spec: &RingSpec, opspec: &OperatorSpec, digest: &str) -> Result<Report> {
    let mut report = Report::new("order", digest);
    let prime = match spec {
        RingSpec::Diagonal(d) => d.weights.prime(),
        RingSpec::Group(g) => g.group.prime,
        RingSpec::Extension(_) => {
            return Err(Error::Input(
                "order needs a diagonal or group ring spec".into(),
            ))
        }
    };
    report.put("p", prime.to_string());
    report.put("window", opspec.window.bound().to_string());
    report.put("window-monomials", opspec.window.size().to_string());
    report.put("safe-degree", opspec.operator.safe_degree().to_string());
    match crate::diffop::operator_order(&opspec.operator, opspec.max_order)? {
        Some(n) => report.put(
            "order",
            format!(
                "{n} (all {}-fold commutators with the variables vanish on the safe window)",
                n + 1
            ),
        ),
        None => {
            report.put(
                "order",
                format!("none found up to max order {}", opspec.max_order),
            );
            report.exit_code = 2;
        }
    }
    let mut rows = Vec::new();
    let mut q = prime;
    while let Ok(ok) = crate::diffop::is_rq_linear(&opspec.operator, q) {
        rows.push(vec![
            q.to_string(),
            if ok { "yes".into() } else { "no".into() },
        ]);
        let Some(next) = q.checked_mul(prime) else {
            break;
        };
        q = next;
        if rows.len() >= 4 {
            break;
        }
    }
    report.put_table("q-power-linearity", vec!["q".into(), "linear".into()], rows);
    Ok(report)
}

/// Witness search for an operator sending the squared invariant monomial
/// to 1.
pub fn cmd_witness(
    spec: &RingSpec,
    digest: &str,
    c_exponent: &[u64],
    opts: &Options,
) -> Result<Report> {
    let RingSpec::Diagonal(d) = spec else {
        return Err(Error::Input(
            "witness search needs a diagonal ring spec".into(),
        ));
    };
    let ws = &d.weights;
    let mut report = Report::new("witness", digest);
    report.put("ring-kind", "diagonal");
    report.put("p", ws.prime().to_string());
    report.put(
        "c",
        format!(
            "x^({})",
            c_exponent
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
    );
    let q_max = opts.q_max_or_default(ws.prime());
    report.put("q-max", q_max.to_string());
    match crate::diffop::dsimplicity_witness_search(ws, c_exponent, q_max)? {
        Some(w) => {
            report.put("witness", format!("found at q = {} (e = {})", w.q, w.e));
            report.put(
                "residue",
                format!(
                    "({})",
                    w.residue
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            );
            report.put("summand-degree", w.class_degree.to_string());
            let rows: Vec<Vec<String>> = w
                .generator_images
                .iter()
                .map(|(g, img)| {
                    vec![
                        format!(
                            "({})",
                            g.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                        format!(
                            "({})",
                            img.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    ]
                })
                .collect();
            report.put_table(
                "generator-images",
                vec!["generator".into(), "image".into()],
                rows,
            );
            report.put(
                "soundness",
                "replayed on a sample window: maps the squared monomial to 1 and commutes with q-th powers of the invariant generators",
            );
        }
        None => {
            report.put(
                "witness",
                format!(
                    "none found for q <= {q_max}; inconclusive (absence is not a negative proof)"
                ),
            );
            report.exit_code = 2;
        }
    }
    Ok(report)
}

/// Cross-check used by tests and examples: the pushforward multiplicities
/// of an abelian group computed by both engines, paired by matching the
/// irreducible U_i with the diagonal class of torsion degree -i.
pub fn abelian_cross_check(gd: &GroupData, ws: &WeightSystem, e: u32) -> Result<Vec<(u64, u64)>> {
    let group_mults = groupchar::pushforward_multiplicities(gd, e)?;
    let unit = CovariantClass::unit(ws);
    let dec = diag::pushforward_decompose(ws, &unit, e, diag::DEFAULT_CELL_BUDGET)?;
    let m = gd.field.modulus();
    if ws.grading().free_rank() != 0 || ws.grading().torsion_orders() != [m] {
        return Err(Error::Input(
            "cross-check needs the weight system graded by Z/m for the group's conductor m".into(),
        ));
    }
    let mut pairs = Vec::new();
    for (i, &gm) in group_mults.iter().enumerate() {
        // The covariant component of U_i is the monomial module of
        // torsion degree -i.
        let target = ws
            .grading()
            .character(vec![], vec![-(i as i64)])
            .expect("shape checked above");
        let diag_mult = dec
            .entries
            .values()
            .filter(|(class, _)| {
                class
                    .degree()
                    .to_integral()
                    .map(|c| c == target)
                    .unwrap_or(false)
            })
            .map(|(_, mult)| *mult)
            .sum::<u64>();
        pairs.push((gm, diag_mult));
    }
    Ok(pairs)
}
