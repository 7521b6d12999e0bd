//! Plain-text records shared by the CLI and the fixtures.
//!
//! A record is a sequence of `key: value` lines; `#` starts a comment and
//! blank lines are ignored. Lists are comma separated with optional
//! brackets, matrix rows are separated by `;`.
//!
//! ```text
//! field: Q
//! d: 1
//! type: II
//! beta: 2
//! theta: 1, -1
//! theta_star: 1, -1
//! zeta: 1, 2
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::leonard::{zeta_from_phi, MatrixPair};
use crate::linalg::Matrix;
use crate::params::{Abc, Family, ParameterArray, TdType, TypeData};
use crate::poly::Poly;

/// Raw `key: value` pairs with the line each came from.
#[derive(Debug, Clone, Default)]
pub struct Record {
    entries: BTreeMap<String, (usize, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl Record {
    pub fn parse(text: &str) -> Result<Record> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once(':')
                .ok_or_else(|| parse_err(line, format!("expected `key: value`, got `{body}`")))?;
            let key = canonical_key(key.trim());
            if entries.insert(key.clone(), (line, value.trim().to_string())).is_some() {
                return Err(parse_err(line, format!("duplicate key `{key}`")));
            }
        }
        Ok(Record { entries })
    }

    pub fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    /// Line of `key`, or 0 when absent.
    pub fn line(&self, key: &str) -> usize {
        self.entries.get(key).map_or(0, |(l, _)| *l)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<(usize, &str)> {
        self.entries
            .get(key)
            .map(|(l, v)| (*l, v.as_str()))
            .ok_or_else(|| parse_err(0, format!("missing key `{key}`")))
    }

    /// Keys not in `allowed`, reported with their line.
    pub fn reject_unknown(&self, allowed: &[&str]) -> Result<()> {
        match self.entries.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, (line, _))) => Err(parse_err(*line, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn field(&self) -> Result<Field> {
        let (line, v) = self.require("field")?;
        v.parse().map_err(|e| parse_err(line, format!("{e}")))
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        let (line, v) = self.require(key)?;
        v.parse()
            .map_err(|_| parse_err(line, format!("`{key}` must be a nonnegative integer, got `{v}`")))
    }

    pub fn elem(&self, key: &str, field: Field) -> Result<Elem> {
        let (line, v) = self.require(key)?;
        field.parse_elem(v).map_err(|e| parse_err(line, format!("{key}: {e}")))
    }

    pub fn opt_elem(&self, key: &str, field: Field) -> Result<Option<Elem>> {
        if self.has(key) {
            self.elem(key, field).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn list(&self, key: &str, field: Field) -> Result<Vec<Elem>> {
        let (line, v) = self.require(key)?;
        parse_list(v, field).map_err(|e| parse_err(line, format!("{key}: {e}")))
    }

    pub fn matrix(&self, key: &str, field: Field) -> Result<Matrix> {
        let (line, v) = self.require(key)?;
        let rows = v
            .split(';')
            .map(|row| parse_list(row, field))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(line, format!("{key}: {e}")))?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(parse_err(line, format!("{key}: matrix is not square")));
        }
        Ok(Matrix::from_rows(field, rows))
    }
}

fn canonical_key(key: &str) -> String {
    match key {
        "a*" => "a_star".into(),
        "b*" => "b_star".into(),
        "c*" => "c_star".into(),
        "theta*" => "theta_star".into(),
        "A*" => "A_star".into(),
        other => other.to_string(),
    }
}

/// Parses `x, y, z` or `[x, y, z]`; an empty list is allowed.
pub fn parse_list(text: &str, field: Field) -> Result<Vec<Elem>> {
    let t = text.trim();
    let t = t.strip_prefix('[').map_or(t, |s| s.strip_suffix(']').unwrap_or(s)).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| Ok(field.parse_elem(x)?)).collect()
}

/// Ascending coefficient list, the inverse of `Poly`'s `Display`.
pub fn parse_poly(text: &str, field: Field) -> Result<Poly> {
    Ok(Poly::new(field, parse_list(text, field)?))
}

pub fn render_list(xs: &[Elem]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    items.join(", ")
}

/// A parsed array file: the array plus any type data given alongside it.
#[derive(Debug, Clone)]
pub struct ArrayFile {
    pub array: ParameterArray,
    pub type_data: Option<TypeData>,
}

const ARRAY_KEYS: [&str; 15] = [
    "field", "d", "type", "beta", "q", "theta", "theta_star", "zeta", "phi", "a", "b", "c", "a_star", "b_star",
    "c_star",
];

const TD_KEYS: [&str; 6] = ["a", "b", "c", "a_star", "b_star", "c_star"];

/// Parses an array record. `field_override` replaces the `field` line, which
/// then becomes optional.
pub fn parse_array(text: &str, field_override: Option<Field>) -> Result<ArrayFile> {
    let rec = Record::parse(text)?;
    rec.reject_unknown(&ARRAY_KEYS)?;
    let field = match field_override {
        Some(f) => f,
        None => rec.field()?,
    };
    let theta = rec.list("theta", field)?;
    let theta_star = rec.list("theta_star", field)?;
    if theta.is_empty() {
        return Err(parse_err(rec.line("theta"), "theta must have at least one entry"));
    }
    if rec.has("d") {
        let d = rec.usize("d")?;
        if theta.len() != d + 1 {
            return Err(parse_err(
                rec.line("theta"),
                format!("theta has {} entries but d = {d}", theta.len()),
            ));
        }
    }
    let zeta = match (rec.has("zeta"), rec.has("phi")) {
        (true, false) => rec.list("zeta", field)?,
        (false, true) => {
            let phi = rec.list("phi", field)?;
            if phi.len() + 1 != theta.len() {
                return Err(parse_err(rec.line("phi"), format!("phi needs d = {} entries", theta.len() - 1)));
            }
            zeta_from_phi(field, &phi)
        }
        (true, true) => return Err(parse_err(rec.line("phi"), "give either zeta or phi, not both")),
        (false, false) => return Err(parse_err(0, "missing key `zeta` (or `phi`)")),
    };
    let beta = rec.opt_elem("beta", field)?;
    let q = rec.opt_elem("q", field)?;
    let array = ParameterArray::new(field, theta, theta_star, zeta, beta, q)?;
    if rec.has("type") {
        let line = rec.line("type");
        let tag: TdType = rec.raw("type").unwrap_or_default().parse().map_err(|e| parse_err(line, format!("{e}")))?;
        if tag != array.td_type() {
            return Err(parse_err(
                line,
                format!("declared type {tag} but the data has type {}", array.td_type()),
            ));
        }
    }
    let type_data = if TD_KEYS.iter().any(|k| rec.has(k)) {
        Some(parse_abc_pair(&rec, array.family(), field)?)
    } else {
        None
    };
    Ok(ArrayFile { array, type_data })
}

fn parse_abc_pair(rec: &Record, family: Family, field: Field) -> Result<TypeData> {
    let side = |a: &str, b: &str, c: &str| -> Result<Abc> {
        Ok(Abc::new(rec.elem(a, field)?, rec.elem(b, field)?, rec.elem(c, field)?))
    };
    Ok(TypeData {
        family,
        eig: side("a", "b", "c")?,
        dual: side("a_star", "b_star", "c_star")?,
    })
}

/// Renders an array record that [`parse_array`] reads back unchanged.
pub fn render_array(pa: &ParameterArray, td: Option<&TypeData>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", pa.field());
    let _ = writeln!(out, "d: {}", pa.d());
    let _ = writeln!(out, "type: {}", pa.td_type());
    let _ = writeln!(out, "beta: {}", pa.beta());
    if let Some(q) = pa.q() {
        let _ = writeln!(out, "q: {q}");
    }
    let _ = writeln!(out, "theta: {}", render_list(pa.theta()));
    let _ = writeln!(out, "theta_star: {}", render_list(pa.theta_star()));
    let _ = writeln!(out, "zeta: {}", render_list(pa.zeta()));
    if let Some(td) = td {
        out.push_str(&render_abc_pair(td));
    }
    out
}

fn render_abc_pair(td: &TypeData) -> String {
    let mut out = String::new();
    for (k, x) in [
        ("a", &td.eig.a),
        ("b", &td.eig.b),
        ("c", &td.eig.c),
        ("a*", &td.dual.a),
        ("b*", &td.dual.b),
        ("c*", &td.dual.c),
    ] {
        let _ = writeln!(out, "{k}: {x}");
    }
    out
}

/// A type-data file: `field`, `d`, `q` for type I, and the six scalars.
#[derive(Debug, Clone)]
pub struct TypeDataFile {
    pub d: usize,
    pub type_data: TypeData,
}

pub fn parse_type_data(text: &str, ty: TdType, field_override: Option<Field>) -> Result<TypeDataFile> {
    let rec = Record::parse(text)?;
    rec.reject_unknown(&["field", "d", "q", "a", "b", "c", "a_star", "b_star", "c_star"])?;
    let field = match field_override {
        Some(f) => f,
        None => rec.field()?,
    };
    let d = rec.usize("d")?;
    let q = rec.opt_elem("q", field)?;
    if q.is_some() && ty != TdType::I {
        return Err(parse_err(rec.line("q"), format!("q is only meaningful for type I, not {ty}")));
    }
    let family = Family::of(ty, q.as_ref())?;
    let type_data = parse_abc_pair(&rec, family, field)?;
    type_data.validate(d)?;
    Ok(TypeDataFile { d, type_data })
}

pub fn render_type_data(d: usize, td: &TypeData) -> String {
    let mut out = format!("field: {}\nd: {d}\n", td.field());
    if let Some(q) = td.q() {
        let _ = writeln!(out, "q: {q}");
    }
    out.push_str(&render_abc_pair(td));
    out
}

/// A matrix file: the pair `A`, `A*` with the eigenvalue orderings.
#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub theta: Vec<Elem>,
    pub theta_star: Vec<Elem>,
    pub pair: MatrixPair,
}

pub fn parse_matrices(text: &str, field_override: Option<Field>) -> Result<MatrixFile> {
    let rec = Record::parse(text)?;
    rec.reject_unknown(&["field", "d", "theta", "theta_star", "A", "A_star"])?;
    let field = match field_override {
        Some(f) => f,
        None => rec.field()?,
    };
    let theta = rec.list("theta", field)?;
    let theta_star = rec.list("theta_star", field)?;
    let a = rec.matrix("A", field)?;
    let a_star = rec.matrix("A_star", field)?;
    let n = theta.len();
    if n == 0 || theta_star.len() != n {
        return Err(parse_err(rec.line("theta_star"), "theta and theta_star need the same positive length"));
    }
    if rec.has("d") && rec.usize("d")? + 1 != n {
        return Err(parse_err(rec.line("d"), "d does not match the length of theta"));
    }
    for (key, m) in [("A", &a), ("A_star", &a_star)] {
        if m.rows() != n {
            return Err(parse_err(rec.line(key), format!("{key} must be {n} x {n}")));
        }
    }
    Ok(MatrixFile {
        theta,
        theta_star,
        pair: MatrixPair { a, a_star },
    })
}

pub fn render_matrices(theta: &[Elem], theta_star: &[Elem], pair: &MatrixPair) -> String {
    let rows = |m: &Matrix| {
        (0..m.rows())
            .map(|i| render_list(m.row(i)))
            .collect::<Vec<_>>()
            .join("; ")
    };
    format!(
        "field: {}\nd: {}\ntheta: {}\ntheta_star: {}\nA: {}\nA_star: {}\n",
        pair.a.field(),
        theta.len() - 1,
        render_list(theta),
        render_list(theta_star),
        rows(&pair.a),
        rows(&pair.a_star)
    )
}
