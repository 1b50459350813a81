//! Plain-text ring specifications.
//!
//! A spec file is a sequence of `key = value` lines grouped by `[section]`
//! headers, with `#` comments. Three kinds are supported:
//!
//! ```text
//! kind = diagonal          # torus / finite diagonal action
//! [grading]
//! free_rank = 1
//! torsion_orders = 2 4     # optional
//! [weights]
//! weight = 1 0 1           # free coords then torsion residues
//! count = 3                # alternative when the grading is trivial
//! [prime]
//! p = 3
//! [positivity]             # optional positive variable degrees
//! degrees = 1 1
//! [dynamics]               # optional
//! division_dims = 1 1
//! ```
//!
//! ```text
//! kind = group             # finite group, order prime to p
//! [prime]
//! p = 7
//! [group]
//! modulus = 3              # eigenvalues live in Q(zeta_modulus)
//! class = 1 : 0 0          # size : eigenvalue exponents on W
//! [table]
//! row = 1, 1, 1            # cyclotomic values in z, comma separated
//! names = triv chi chi2    # optional
//! ```
//!
//! ```text
//! kind = extension         # module-finite extension of a polynomial base
//! [extension]
//! characteristic = 0       # 0 for the rationals, else a prime
//! base_vars = x
//! basis_size = 2
//! product 2 2 = 1: x       # r_2 * r_2 = x * r_1; identity row implied
//! ```
//!
//! Operator files (for the `order` command) use one `[operator]` section
//! with `window`, optional `max_order`, and one line per summand:
//! `term = coeff ; exponents ; divided-power orders` or
//! `project = q ; residues`.
//!
//! Every module-level precondition is checked here, with the offending
//! line in the message.

use std::sync::Arc;

use crate::cyclotomic::{parse_cyclotomic, CyclotomicField};
use crate::diffop::{
    parse_poly, CoeffField, Poly, RingExtensionPresentation, TruncatedOperator, Window,
};
use crate::error::{Error, Result};
use crate::groupchar::{ConjugacyClassData, GroupData};
use crate::lattice::{GradingGroup, WeightSystem};

#[derive(Debug)]
pub enum RingSpec {
    Diagonal(DiagonalSpec),
    Group(GroupSpec),
    Extension(ExtensionSpec),
}

#[derive(Debug)]
pub struct DiagonalSpec {
    pub weights: WeightSystem,
    pub division_dims: Option<Vec<u64>>,
}

#[derive(Debug)]
pub struct GroupSpec {
    pub group: GroupData,
    pub division_dims: Option<Vec<u64>>,
}

#[derive(Debug)]
pub struct ExtensionSpec {
    pub extension: RingExtensionPresentation,
}

impl RingSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            RingSpec::Diagonal(_) => "diagonal",
            RingSpec::Group(_) => "group",
            RingSpec::Extension(_) => "extension",
        }
    }
}

/// One parsed line: line number, section, key, value.
#[derive(Debug, Clone)]
struct Entry {
    line: usize,
    section: String,
    key: String,
    value: String,
}

fn err_at(line: usize, msg: impl Into<String>) -> Error {
    Error::Input(format!("line {line}: {}", msg.into()))
}

fn tokenize(text: &str) -> Result<Vec<Entry>> {
    let mut entries = Vec::new();
    let mut section = String::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let s = stripped.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(rest) = s.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return Err(err_at(line, "unterminated section header"));
            };
            section = name.trim().to_string();
            continue;
        }
        let Some(eq) = s.find('=') else {
            return Err(err_at(line, "expected 'key = value'"));
        };
        entries.push(Entry {
            line,
            section: section.clone(),
            key: s[..eq].trim().to_string(),
            value: s[eq + 1..].trim().to_string(),
        });
    }
    Ok(entries)
}

fn parse_u64(e: &Entry) -> Result<u64> {
    e.value.parse().map_err(|_| {
        err_at(
            e.line,
            format!("'{}' is not a nonnegative integer", e.value),
        )
    })
}

fn parse_u64_list(e: &Entry) -> Result<Vec<u64>> {
    e.value
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err_at(e.line, format!("'{t}' is not a nonnegative integer")))
        })
        .collect()
}

fn parse_i64_list(e: &Entry) -> Result<Vec<i64>> {
    e.value
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err_at(e.line, format!("'{t}' is not an integer")))
        })
        .collect()
}

struct Doc {
    entries: Vec<Entry>,
}

impl Doc {
    fn one(&self, section: &str, key: &str) -> Result<&Entry> {
        let mut found = None;
        for e in &self.entries {
            if e.section == section && e.key == key {
                if found.is_some() {
                    return Err(err_at(e.line, format!("duplicate '{key}' in [{section}]")));
                }
                found = Some(e);
            }
        }
        found.ok_or_else(|| Error::Input(format!("missing '{key}' in section [{section}]")))
    }

    fn optional(&self, section: &str, key: &str) -> Option<&Entry> {
        self.entries
            .iter()
            .find(|e| e.section == section && e.key == key)
    }

    fn all(&self, section: &str, key: &str) -> Vec<&Entry> {
        self.entries
            .iter()
            .filter(|e| e.section == section && e.key == key)
            .collect()
    }
}

/// Parse a ring spec from file contents.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    if text.trim().is_empty() {
        return Err(Error::Input("empty spec file".into()));
    }
    let doc = Doc {
        entries: tokenize(text)?,
    };
    let kind = doc.one("", "kind")?;
    match kind.value.as_str() {
        "diagonal" => parse_diagonal(&doc).map(RingSpec::Diagonal),
        "group" => parse_group(&doc).map(RingSpec::Group),
        "extension" => parse_extension(&doc).map(RingSpec::Extension),
        other => Err(err_at(
            kind.line,
            format!("unknown kind '{other}' (expected diagonal, group or extension)"),
        )),
    }
}

fn parse_diagonal(doc: &Doc) -> Result<DiagonalSpec> {
    let free_rank = parse_u64(doc.one("grading", "free_rank")?)? as usize;
    let torsion_orders = match doc.optional("grading", "torsion_orders") {
        Some(e) if !e.value.is_empty() => parse_u64_list(e)?,
        _ => vec![],
    };
    let grading = GradingGroup::new(free_rank, torsion_orders.clone())?;
    let prime_entry = doc.one("prime", "p")?;
    let prime = parse_u64(prime_entry)?;

    let mut weights = Vec::new();
    let weight_entries = doc.all("weights", "weight");
    let expected = free_rank + torsion_orders.len();
    if weight_entries.is_empty() {
        // trivial-character fallback: a bare variable count
        let count_entry = doc.one("weights", "count").map_err(|_| {
            Error::Input(
                "section [weights] needs 'weight = ...' lines (or 'count = N' when the grading is trivial)"
                    .into(),
            )
        })?;
        if expected != 0 {
            return Err(err_at(
                count_entry.line,
                "'count' is only valid when the grading has no coordinates",
            ));
        }
        let count = parse_u64(count_entry)? as usize;
        if count == 0 {
            return Err(err_at(count_entry.line, "at least one variable required"));
        }
        weights = vec![grading.zero_character(); count];
    } else {
        for e in weight_entries {
            let nums = parse_i64_list(e)?;
            if nums.len() != expected {
                return Err(err_at(
                    e.line,
                    format!(
                        "weight has {} coordinates; the grading needs {expected} (free then torsion)",
                        nums.len()
                    ),
                ));
            }
            let (free, torsion) = nums.split_at(free_rank);
            weights.push(
                grading
                    .character(free.to_vec(), torsion.to_vec())
                    .map_err(|err| err_at(e.line, err.to_string()))?,
            );
        }
    }

    let var_degrees = match doc.optional("positivity", "degrees") {
        Some(e) => {
            let v = parse_u64_list(e)?;
            if v.len() != weights.len() {
                return Err(err_at(
                    e.line,
                    format!("{} degrees for {} variables", v.len(), weights.len()),
                ));
            }
            Some(v)
        }
        None => None,
    };
    let division_dims = match doc.optional("dynamics", "division_dims") {
        Some(e) => Some(parse_u64_list(e)?),
        None => None,
    };
    let ws = WeightSystem::new(grading, weights, prime, var_degrees)
        .map_err(|err| err_at(prime_entry.line, err.to_string()))?;
    Ok(DiagonalSpec {
        weights: ws,
        division_dims,
    })
}

fn parse_group(doc: &Doc) -> Result<GroupSpec> {
    let prime = parse_u64(doc.one("prime", "p")?)?;
    let modulus_entry = doc.one("group", "modulus")?;
    let modulus = parse_u64(modulus_entry)?;
    if modulus == 0 {
        return Err(err_at(modulus_entry.line, "modulus must be positive"));
    }
    let mut classes = Vec::new();
    for e in doc.all("group", "class") {
        let Some((size_str, exps_str)) = e.value.split_once(':') else {
            return Err(err_at(e.line, "class line must be 'size : exponents'"));
        };
        let size: u64 = size_str
            .trim()
            .parse()
            .map_err(|_| err_at(e.line, "bad class size"))?;
        let exponents: Vec<u64> = exps_str
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| err_at(e.line, format!("bad exponent '{t}'")))
            })
            .collect::<Result<_>>()?;
        classes.push(ConjugacyClassData {
            size,
            eigenvalue_exponents: exponents.iter().map(|&a| a % modulus).collect(),
        });
    }
    if classes.is_empty() {
        return Err(Error::Input(
            "section [group] needs 'class = size : exponents' lines".into(),
        ));
    }
    let field = CyclotomicField::new(modulus);
    let mut rows = Vec::new();
    for e in doc.all("table", "row") {
        let mut row = Vec::new();
        for part in e.value.split(',') {
            row.push(
                parse_cyclotomic(&field, part).map_err(|err| err_at(e.line, err.to_string()))?,
            );
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Input(
            "section [table] needs 'row = ...' lines".into(),
        ));
    }
    let names = doc.optional("table", "names").map(|e| {
        e.value
            .split_whitespace()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
    });
    let division_dims = match doc.optional("dynamics", "division_dims") {
        Some(e) => Some(parse_u64_list(e)?),
        None => None,
    };
    let group = GroupData::new(modulus, classes, rows, prime, names)?;
    Ok(GroupSpec {
        group,
        division_dims,
    })
}

fn parse_extension(doc: &Doc) -> Result<ExtensionSpec> {
    let char_entry = doc.one("extension", "characteristic")?;
    let characteristic = parse_u64(char_entry)?;
    let field = if characteristic == 0 {
        CoeffField::Rational
    } else {
        CoeffField::Prime(characteristic)
    };
    let base_vars: Vec<String> = doc
        .one("extension", "base_vars")?
        .value
        .split_whitespace()
        .map(|s| s.to_string())
        .collect();
    let n = parse_u64(doc.one("extension", "basis_size")?)? as usize;
    if n == 0 {
        return Err(Error::Input("basis_size must be positive".into()));
    }
    let nvars = base_vars.len();
    let zero = Poly::zero(field);
    let one = Poly::constant(field, 1, nvars);
    let mut products: Vec<Vec<Option<Vec<Poly>>>> = vec![vec![None; n]; n];
    // identity row: r_1 * r_j = r_j
    for j in 0..n {
        let mut row = vec![zero.clone(); n];
        row[j] = one.clone();
        products[0][j] = Some(row.clone());
        products[j][0] = Some(row);
    }
    for e in &doc.entries {
        if e.section != "extension" || !e.key.starts_with("product") {
            continue;
        }
        let idx: Vec<&str> = e.key.split_whitespace().collect();
        if idx.len() != 3 {
            return Err(err_at(e.line, "product key must be 'product i j'"));
        }
        let i: usize = idx[1]
            .parse()
            .map_err(|_| err_at(e.line, "bad product index"))?;
        let j: usize = idx[2]
            .parse()
            .map_err(|_| err_at(e.line, "bad product index"))?;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(err_at(
                e.line,
                format!("product indices must be in 1..={n}"),
            ));
        }
        let mut row = vec![zero.clone(); n];
        for part in e.value.split(',') {
            let Some((k_str, poly_str)) = part.split_once(':') else {
                return Err(err_at(e.line, "each product term must be 'k: polynomial'"));
            };
            let k: usize = k_str
                .trim()
                .parse()
                .map_err(|_| err_at(e.line, "bad basis index"))?;
            if k == 0 || k > n {
                return Err(err_at(e.line, format!("basis index must be in 1..={n}")));
            }
            let poly = parse_poly(poly_str, &base_vars, field)
                .map_err(|err| err_at(e.line, err.to_string()))?;
            row[k - 1] = row[k - 1].add(&poly);
        }
        products[i - 1][j - 1] = Some(row.clone());
        products[j - 1][i - 1] = Some(row);
    }
    let mut filled = Vec::with_capacity(n);
    for (i, row) in products.into_iter().enumerate() {
        let mut out_row = Vec::with_capacity(n);
        for (j, cell) in row.into_iter().enumerate() {
            out_row.push(cell.ok_or_else(|| {
                Error::Input(format!("missing 'product {} {}' line", i + 1, j + 1))
            })?);
        }
        filled.push(out_row);
    }
    let extension = RingExtensionPresentation::new(base_vars, field, n, filled)?;
    Ok(ExtensionSpec { extension })
}

/// A parsed operator file: the window it lives on, the operator, and an
/// optional order-search bound.
#[derive(Debug)]
pub struct OperatorSpec {
    pub window: Arc<Window>,
    pub operator: TruncatedOperator,
    pub max_order: u32,
}

/// Parse an operator file against the ambient data of a ring spec
/// (variable count and characteristic).
pub fn parse_operator_spec(text: &str, vars: usize, prime: u64) -> Result<OperatorSpec> {
    let doc = Doc {
        entries: tokenize(text)?,
    };
    if let Some(e) = doc.optional("operator", "vars") {
        let v = parse_u64(e)? as usize;
        if v != vars {
            return Err(err_at(
                e.line,
                format!("operator declares {v} variables but the ring spec has {vars}"),
            ));
        }
    }
    if let Some(e) = doc.optional("operator", "prime") {
        let p = parse_u64(e)?;
        if p != prime {
            return Err(err_at(
                e.line,
                format!("operator declares characteristic {p} but the ring spec has {prime}"),
            ));
        }
    }
    let window_bound = parse_u64(doc.one("operator", "window")?)? as u32;
    if window_bound < 2 {
        return Err(Error::Input("operator window must be at least 2".into()));
    }
    let window = Window::new(vars, prime, window_bound);
    let max_order = match doc.optional("operator", "max_order") {
        Some(e) => parse_u64(e)? as u32,
        None => (window_bound - 1).min(16),
    };

    let mut acc: Option<TruncatedOperator> = None;
    let mut add = |op: TruncatedOperator| {
        acc = Some(match acc.take() {
            None => op,
            Some(prev) => prev.add(&op),
        });
    };
    for e in &doc.entries {
        if e.section != "operator" {
            continue;
        }
        match e.key.as_str() {
            "term" => {
                let parts: Vec<&str> = e.value.split(';').collect();
                if parts.len() != 3 {
                    return Err(err_at(
                        e.line,
                        "term must be 'coeff ; monomial exponents ; divided-power orders'",
                    ));
                }
                let coeff: i64 = parts[0]
                    .trim()
                    .parse()
                    .map_err(|_| err_at(e.line, "bad term coefficient"))?;
                let exps = parse_exponents(parts[1], vars, e.line)?;
                let orders = parse_exponents(parts[2], vars, e.line)?;
                let mult = TruncatedOperator::multiplication(&window, &exps);
                let diff = TruncatedOperator::divided_partial(&window, &orders);
                // x^a . D^[b]: apply the differential first, then multiply.
                let composed = mult.compose(&diff);
                add(composed.scale(coeff.rem_euclid(prime as i64) as u64));
            }
            "project" => {
                let parts: Vec<&str> = e.value.split(';').collect();
                if parts.len() != 2 {
                    return Err(err_at(e.line, "project must be 'q ; residues'"));
                }
                let q: u64 = parts[0]
                    .trim()
                    .parse()
                    .map_err(|_| err_at(e.line, "bad projection modulus"))?;
                if q == 0 {
                    return Err(err_at(e.line, "projection modulus must be positive"));
                }
                let v = parse_exponents(parts[1], vars, e.line)?;
                add(TruncatedOperator::residue_projection(&window, q, &v));
            }
            "vars" | "prime" | "window" | "max_order" => {}
            other => return Err(err_at(e.line, format!("unknown operator key '{other}'"))),
        }
    }
    let operator = acc
        .ok_or_else(|| Error::Input("operator file defines no 'term' or 'project' lines".into()))?;
    Ok(OperatorSpec {
        window,
        operator,
        max_order,
    })
}

fn parse_exponents(s: &str, vars: usize, line: usize) -> Result<Vec<u32>> {
    let v: Vec<u32> = s
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err_at(line, format!("bad exponent '{t}'")))
        })
        .collect::<Result<_>>()?;
    if v.len() != vars {
        return Err(err_at(
            line,
            format!("{} exponents for {vars} variables", v.len()),
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADRIC: &str = "\
kind = diagonal

[grading]
free_rank = 0
torsion_orders = 2

[weights]
weight = 1
weight = 1

[prime]
p = 3
";

    #[test]
    fn parses_quadric_cone() {
        let spec = parse_ring_spec(QUADRIC).unwrap();
        let RingSpec::Diagonal(d) = spec else {
            panic!("wrong kind")
        };
        assert_eq!(d.weights.num_vars(), 2);
        assert_eq!(d.weights.prime(), 3);
        assert_eq!(d.weights.krull_dim(), 2);
    }

    #[test]
    fn empty_file_is_an_error() {
        assert!(parse_ring_spec("").is_err());
        assert!(parse_ring_spec("   \n  # only a comment\n").is_err());
    }

    #[test]
    fn non_coprime_p_and_torsion_cites_line() {
        let text = QUADRIC.replace("p = 3", "p = 2");
        let err = parse_ring_spec(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "message was: {msg}");
        assert!(msg.contains("torsion"), "message was: {msg}");
    }

    #[test]
    fn weight_shape_mismatch_cites_line() {
        let text = QUADRIC.replace("weight = 1\nweight = 1", "weight = 1 2\nweight = 1");
        let err = parse_ring_spec(&text).unwrap_err().to_string();
        assert!(err.contains("coordinates"), "message was: {err}");
    }

    #[test]
    fn parses_group_spec() {
        let text = "\
kind = group

[prime]
p = 7

[group]
modulus = 3
class = 1 : 0 0
class = 1 : 1 2
class = 1 : 2 1

[table]
row = 1, 1, 1
row = 1, z, z^2
row = 1, z^2, z
";
        let RingSpec::Group(g) = parse_ring_spec(text).unwrap() else {
            panic!()
        };
        assert_eq!(g.group.order(), 3);
        assert_eq!(g.group.dim_w(), 2);
    }

    #[test]
    fn parses_extension_spec() {
        let text = "\
kind = extension

[extension]
characteristic = 0
base_vars = x
basis_size = 2
product 2 2 = 1: x
product 1 2 = 2: 1
product 1 1 = 1: 1
";
        let RingSpec::Extension(e) = parse_ring_spec(text).unwrap() else {
            panic!()
        };
        let disc = e.extension.discriminant();
        assert_eq!(disc.poly.render(&e.extension.base_vars), "4*x");
    }

    #[test]
    fn missing_product_is_an_error() {
        let text = "\
kind = extension

[extension]
characteristic = 0
base_vars = x
basis_size = 2
";
        let err = parse_ring_spec(text).unwrap_err().to_string();
        assert!(err.contains("product 2 2"), "message was: {err}");
    }

    #[test]
    fn parses_operator_file() {
        let text = "\
[operator]
vars = 1
prime = 2
window = 12
term = 1 ; 0 ; 1
";
        let spec = parse_operator_spec(text, 1, 2).unwrap();
        assert_eq!(spec.window.bound(), 12);
        assert_eq!(
            crate::diffop::operator_order(&spec.operator, 4).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn operator_projection_parses() {
        let text = "\
[operator]
window = 10
project = 2 ; 0
";
        let spec = parse_operator_spec(text, 1, 2).unwrap();
        assert_eq!(
            crate::diffop::operator_order(&spec.operator, 4).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn operator_var_mismatch_is_an_error() {
        let text = "\
[operator]
vars = 2
window = 10
term = 1 ; 0 0 ; 1 0
";
        assert!(parse_operator_spec(text, 1, 2).is_err());
    }
}
