//! Parameter arrays `(θ; θ*; ζ)` with their base, type, type data and the
//! D4 action.

use std::fmt;
use std::str::FromStr;

use crate::brackets::bracket;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TdType {
    I,
    II,
    IIIPlus,
    IIIMinus,
    IV,
}

impl fmt::Display for TdType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TdType::I => "I",
            TdType::II => "II",
            TdType::IIIPlus => "III+",
            TdType::IIIMinus => "III-",
            TdType::IV => "IV",
        })
    }
}

impl FromStr for TdType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" => Ok(TdType::I),
            "II" => Ok(TdType::II),
            "III+" | "III⁺" => Ok(TdType::IIIPlus),
            "III-" | "III−" | "III⁻" => Ok(TdType::IIIMinus),
            "IV" => Ok(TdType::IV),
            other => Err(Error::InvalidType(format!("unknown type tag `{other}`"))),
        }
    }
}

/// The eigenvalue family of a type. Type III covers both parities; type I
/// carries its `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    I { q: Elem },
    II,
    III,
    IV,
}

impl Family {
    pub fn of(ty: TdType, q: Option<&Elem>) -> Result<Family> {
        Ok(match ty {
            TdType::I => Family::I {
                q: q.cloned()
                    .ok_or_else(|| Error::InvalidArray("type I needs an explicit q".into()))?,
            },
            TdType::II => Family::II,
            TdType::IIIPlus | TdType::IIIMinus => Family::III,
            TdType::IV => Family::IV,
        })
    }

    /// The base this family forces: `q^2 + q^-2`, `2`, `-2` or `0`.
    pub fn beta(&self, field: Field) -> Result<Elem> {
        Ok(match self {
            Family::I { q } => &q.square() + &q.square().inv()?,
            Family::II => field.from_i64(2),
            Family::III => field.from_i64(-2),
            Family::IV => field.zero(),
        })
    }

    /// Coefficients `(f0, f1, f2)` with `θ_i = a f0 + b f1 + c f2`.
    fn basis(&self, field: Field, d: usize, i: usize) -> Result<[Elem; 3]> {
        let one = field.one();
        let zero = field.zero();
        // i - d/2
        let shift = || -> Result<Elem> {
            Ok(&field.from_i64(i as i64) - &field.from_ratio(d as i64, 2)?)
        };
        Ok(match self {
            Family::I { q } => [
                one,
                q.powi(2 * i as i64 - d as i64)?,
                q.powi(d as i64 - 2 * i as i64)?,
            ],
            Family::II => [one, shift()?, field.from_i64((i * (d - i)) as i64)],
            Family::III => {
                if i % 2 == 0 {
                    [one.clone(), one, shift()?]
                } else {
                    [one.clone(), -&one, -&shift()?]
                }
            }
            Family::IV => match i {
                0 => [one, zero.clone(), zero],
                1 => [zero, one.clone(), one],
                2 => [one.clone(), zero, one],
                3 => [zero.clone(), one, zero],
                _ => return Err(Error::InvalidType("type IV requires d = 3".into())),
            },
        })
    }
}

/// One side `(a, b, c)` of the type data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abc {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
}

impl Abc {
    pub fn new(a: Elem, b: Elem, c: Elem) -> Abc {
        Abc { a, b, c }
    }
}

/// Scalars fitting `θ` (`eig`) and `θ*` (`dual`) to the family's formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeData {
    pub family: Family,
    pub eig: Abc,
    pub dual: Abc,
}

impl TypeData {
    pub fn q(&self) -> Option<&Elem> {
        match &self.family {
            Family::I { q } => Some(q),
            _ => None,
        }
    }

    pub fn field(&self) -> Field {
        self.eig.a.field()
    }

    /// `θ_0..θ_d` (or the dual sequence when `dual` is set).
    pub fn sequence(&self, d: usize, dual: bool) -> Result<Vec<Elem>> {
        let abc = if dual { &self.dual } else { &self.eig };
        (0..=d)
            .map(|i| {
                let [f0, f1, f2] = self.family.basis(self.field(), d, i)?;
                Ok(&(&(&abc.a * &f0) + &(&abc.b * &f1)) + &(&abc.c * &f2))
            })
            .collect()
    }

    /// The nonvanishing conditions each family imposes on its scalars.
    pub fn validate(&self, d: usize) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidArray(format!("type data: {what}")));
        match &self.family {
            Family::I { q } => {
                if q.is_zero() {
                    return fail("q = 0");
                }
                for i in 1..=d {
                    if q.pow(2 * i as u32).is_one() {
                        return fail(&format!("q^{} = 1", 2 * i));
                    }
                }
            }
            Family::II => {
                if d >= 1 && (self.eig.b.is_zero() || self.dual.b.is_zero()) {
                    return fail("type II needs b, b* nonzero");
                }
            }
            Family::III => {
                if self.eig.c.is_zero() || self.dual.c.is_zero() {
                    return fail("type III needs c, c* nonzero");
                }
                if d % 2 == 1 && (self.eig.b.is_zero() || self.dual.b.is_zero()) {
                    return fail("type III with d odd needs b, b* nonzero");
                }
            }
            Family::IV => {
                for abc in [&self.eig, &self.dual] {
                    let ab = &abc.a + &abc.b;
                    if ab.is_zero() || (&ab + &abc.c).is_zero() || abc.c.is_zero() {
                        return fail("type IV needs a+b, a+b+c, c nonzero");
                    }
                }
            }
        }
        Ok(())
    }

    /// Type data of the relative reached by `word`, computed symbolically.
    pub fn d4_apply(&self, word: &[Generator], d: usize) -> TypeData {
        let mut td = self.clone();
        for g in word {
            match g {
                Generator::Star => std::mem::swap(&mut td.eig, &mut td.dual),
                Generator::DDown => reverse_abc(&td.family, &mut td.eig, d),
                Generator::Down => reverse_abc(&td.family, &mut td.dual, d),
            }
        }
        td
    }
}

/// Rewrites `abc` so that it describes the reversed sequence.
fn reverse_abc(family: &Family, abc: &mut Abc, d: usize) {
    match family {
        Family::I { .. } => std::mem::swap(&mut abc.b, &mut abc.c),
        Family::II => abc.b = -&abc.b,
        Family::III if d % 2 == 0 => abc.c = -&abc.c,
        Family::III => abc.b = -&abc.b,
        Family::IV => std::mem::swap(&mut abc.a, &mut abc.b),
    }
}

/// Generators of D4 acting on tridiagonal systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `*`: swap the roles of `A` and `A*`.
    Star,
    /// `↓`: reverse the dual eigenvalue ordering.
    Down,
    /// `⇓`: reverse the eigenvalue ordering.
    DDown,
}

/// Parses a word over `s`/`*`, `d`/`↓`, `D`/`⇓`. Generators apply left to
/// right, so `ds` is `↓` followed by `*`.
pub fn parse_word(word: &str) -> Result<Vec<Generator>> {
    word.chars()
        .map(|ch| match ch {
            's' | '*' => Ok(Generator::Star),
            'd' | '↓' => Ok(Generator::Down),
            'D' | '⇓' => Ok(Generator::DDown),
            other => Err(Error::InvalidArray(format!(
                "unknown D4 generator `{other}` (expected s, d or D)"
            ))),
        })
        .collect()
}

/// Words naming the eight relatives, in table order.
pub const RELATIVE_WORDS: [&str; 8] = ["", "d", "D", "dD", "s", "ds", "Ds", "dDs"];

/// A validated parameter array over a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray {
    field: Field,
    theta: Vec<Elem>,
    theta_star: Vec<Elem>,
    zeta: Vec<Elem>,
    beta: Elem,
    q: Option<Elem>,
    ty: TdType,
}

fn check_distinct(seq: &[Elem], name: &str) -> Result<()> {
    for i in 0..seq.len() {
        for j in 0..i {
            if seq[i] == seq[j] {
                return Err(Error::InvalidArray(format!(
                    "{name}_{j} = {name}_{i} = {}; entries must be distinct",
                    seq[i]
                )));
            }
        }
    }
    Ok(())
}

/// `β` from the common ratio `(θ_{i-2} - θ_{i+1}) / (θ_{i-1} - θ_i) = β + 1`,
/// checked for every `i` and against the dual sequence. Needs `d >= 3`.
pub fn compute_base(theta: &[Elem], theta_star: &[Elem]) -> Result<Elem> {
    if theta.len() != theta_star.len() {
        return Err(Error::InvalidArray("θ and θ* differ in length".into()));
    }
    let d = theta.len().saturating_sub(1);
    if d < 3 {
        return Err(Error::InvalidArray(
            "the base is only determined for d >= 3; supply beta explicitly".into(),
        ));
    }
    let ratio = |seq: &[Elem], i: usize| -> Result<Elem> {
        (&seq[i - 2] - &seq[i + 1])
            .checked_div(&(&seq[i - 1] - &seq[i]))
            .map_err(|_| Error::NotTridiagonalSequence("repeated eigenvalue".into()))
    };
    let first = ratio(theta, 2)?;
    for i in 2..d {
        for (seq, name) in [(theta, "θ"), (theta_star, "θ*")] {
            let r = ratio(seq, i)?;
            if r != first {
                return Err(Error::NotTridiagonalSequence(format!(
                    "ratio for {name} at i = {i} is {r}, expected {first}"
                )));
            }
        }
    }
    Ok(&first - &first.one_like())
}

/// Type from base, characteristic and diameter.
pub fn classify_type(beta: &Elem, field: Field, d: usize) -> Result<TdType> {
    let char2 = field.characteristic() == 2;
    let ty = if char2 {
        if beta.is_zero() {
            TdType::IV
        } else {
            TdType::I
        }
    } else if *beta == field.from_i64(2) {
        TdType::II
    } else if *beta == field.from_i64(-2) {
        if d % 2 == 0 {
            TdType::IIIPlus
        } else {
            TdType::IIIMinus
        }
    } else {
        TdType::I
    };
    if ty == TdType::IV && d != 3 {
        return Err(Error::InvalidType(format!("type IV requires d = 3, got d = {d}")));
    }
    Ok(ty)
}

fn check_characteristic(ty: TdType, field: Field, d: usize) -> Result<()> {
    let p = field.characteristic() as usize;
    if p == 0 {
        return Ok(());
    }
    match ty {
        TdType::II if p <= d => Err(Error::Characteristic(format!(
            "type II needs characteristic 0 or greater than d = {d}, got {p}"
        ))),
        TdType::IIIPlus | TdType::IIIMinus if 2 * p <= d => Err(Error::Characteristic(format!(
            "type III needs characteristic 0 or greater than d/2 = {d}/2, got {p}"
        ))),
        _ => Ok(()),
    }
}

impl ParameterArray {
    /// Validates and builds an array. `beta` is required for `d <= 2` and
    /// checked against the computed base otherwise; `q` is required for type
    /// I when `d >= 1` and must satisfy `q^2 + q^-2 = β`.
    pub fn new(
        field: Field,
        theta: Vec<Elem>,
        theta_star: Vec<Elem>,
        zeta: Vec<Elem>,
        beta: Option<Elem>,
        q: Option<Elem>,
    ) -> Result<ParameterArray> {
        if theta.is_empty() {
            return Err(Error::InvalidArray("θ must have at least one entry".into()));
        }
        let d = theta.len() - 1;
        for (seq, name) in [(&theta_star, "θ*"), (&zeta, "ζ")] {
            if seq.len() != d + 1 {
                return Err(Error::InvalidArray(format!(
                    "{name} has {} entries, expected d + 1 = {}",
                    seq.len(),
                    d + 1
                )));
            }
        }
        for x in theta.iter().chain(&theta_star).chain(&zeta).chain(&beta).chain(&q) {
            if x.field() != field {
                return Err(Error::FieldMismatch(x.field(), field));
            }
        }
        if !zeta[0].is_one() {
            return Err(Error::InvalidArray(format!("ζ_0 must be 1, got {}", zeta[0])));
        }
        check_distinct(&theta, "θ")?;
        check_distinct(&theta_star, "θ*")?;
        let beta = if d >= 3 {
            let computed = compute_base(&theta, &theta_star)?;
            if let Some(given) = beta {
                if given != computed {
                    return Err(Error::InvalidArray(format!(
                        "given beta {given} differs from the computed base {computed}"
                    )));
                }
            }
            computed
        } else {
            let b = beta.ok_or_else(|| {
                Error::InvalidArray("beta must be given explicitly when d <= 2".into())
            })?;
            if b.is_zero() {
                return Err(Error::InvalidArray("beta must be nonzero when d <= 2".into()));
            }
            b
        };
        let ty = classify_type(&beta, field, d)?;
        check_characteristic(ty, field, d)?;
        match (&ty, &q) {
            (TdType::I, Some(q)) => {
                let fam = Family::I { q: q.clone() };
                if q.is_zero() || fam.beta(field)? != beta {
                    return Err(Error::InvalidArray(format!(
                        "q = {q} does not satisfy q^2 + q^-2 = beta = {beta}"
                    )));
                }
                for i in 1..=d {
                    if q.pow(2 * i as u32).is_one() {
                        return Err(Error::InvalidArray(format!("q^{} = 1", 2 * i)));
                    }
                }
            }
            (TdType::I, None) if d >= 1 => {
                return Err(Error::InvalidArray("type I needs an explicit q".into()))
            }
            (TdType::I, None) => {}
            (_, Some(_)) => {
                return Err(Error::InvalidArray(format!("q is only meaningful for type I, not {ty}")))
            }
            (_, None) => {}
        }
        Ok(ParameterArray {
            field,
            theta,
            theta_star,
            zeta,
            beta,
            q,
            ty,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta(&self) -> &[Elem] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[Elem] {
        &self.theta_star
    }

    pub fn zeta(&self) -> &[Elem] {
        &self.zeta
    }

    pub fn beta(&self) -> &Elem {
        &self.beta
    }

    pub fn q(&self) -> Option<&Elem> {
        self.q.as_ref()
    }

    pub fn td_type(&self) -> TdType {
        self.ty
    }

    /// Bracket family. A type I array of diameter 0 has no `q`; its only
    /// bracket is `[0,0,0] = 1`, so type II stands in.
    pub fn family(&self) -> Family {
        match (&self.ty, &self.q) {
            (TdType::I, Some(q)) => Family::I { q: q.clone() },
            (TdType::I, None) => Family::II,
            (ty, _) => Family::of(*ty, None).expect("non-I family"),
        }
    }

    /// Same eigenvalue data with a different split sequence.
    pub fn with_zeta(&self, zeta: Vec<Elem>) -> Result<ParameterArray> {
        ParameterArray::new(
            self.field,
            self.theta.clone(),
            self.theta_star.clone(),
            zeta,
            Some(self.beta.clone()),
            self.q.clone(),
        )
    }

    /// Fits the type data to `θ` and `θ*`. Unique for `d >= 2`; for smaller
    /// `d` a canonical completion is returned.
    pub fn fit_type_data(&self) -> Result<TypeData> {
        let family = match (&self.ty, &self.q) {
            (TdType::I, None) => {
                return Err(Error::DataNotInField("type I fitting needs q".into()))
            }
            (ty, q) => Family::of(*ty, q.as_ref())?,
        };
        let eig = fit_side(&family, self.field, &self.theta)?;
        let dual = fit_side(&family, self.field, &self.theta_star)?;
        let td = TypeData { family, eig, dual };
        td.validate(self.d())?;
        Ok(td)
    }

    /// The array of the relative reached by `word` (generators applied left
    /// to right).
    pub fn d4_apply(&self, word: &[Generator]) -> Result<ParameterArray> {
        let mut pa = self.clone();
        for g in word {
            pa = match g {
                Generator::Star => pa.star(),
                Generator::DDown => pa.ddown()?,
                Generator::Down => pa.star().ddown()?.star(),
            };
        }
        Ok(pa)
    }

    fn star(&self) -> ParameterArray {
        ParameterArray {
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            ..self.clone()
        }
    }

    fn ddown(&self) -> Result<ParameterArray> {
        let zeta = self.zeta_ddown()?;
        let mut theta = self.theta.clone();
        theta.reverse();
        Ok(ParameterArray {
            theta,
            zeta,
            ..self.clone()
        })
    }

    /// `ζ^⇓`.
    pub fn zeta_ddown(&self) -> Result<Vec<Elem>> {
        let d = self.d();
        let family = self.family();
        let eta_at = |seq: &[Elem], i: usize| -> Elem {
            seq[d + 1 - i..]
                .iter()
                .fold(self.field.one(), |acc, t| &acc * &(&seq[0] - t))
        };
        (0..=d)
            .map(|i| {
                let denom = eta_at(&self.theta_star, d - i);
                let mut sum = self.field.zero();
                for h in 0..=i {
                    let br = bracket(h, i - h, d - i, &family, self.field, d)?;
                    let num = &eta_at(&self.theta_star, d - h) * &eta_at(&self.theta, i - h);
                    sum += &(&(&br * &num) * &self.zeta[h]);
                }
                Ok(sum.checked_div(&denom)?)
            })
            .collect()
    }
}

/// Least-squares-free fit: solves the full `(d+1) × 3` linear system.
fn fit_side(family: &Family, field: Field, seq: &[Elem]) -> Result<Abc> {
    let d = seq.len() - 1;
    if d <= 1 && !matches!(family, Family::IV) {
        return canonical_small(family, field, seq);
    }
    let rows: Vec<Vec<Elem>> = (0..=d)
        .map(|i| {
            let mut row = family.basis(field, d, i)?.to_vec();
            row.push(seq[i].clone());
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let (r, pivots) = Matrix::from_rows(field, rows).rref();
    if pivots.contains(&3) {
        return Err(Error::FitFailure(format!(
            "the sequence {} does not follow the type formula",
            render(seq)
        )));
    }
    if pivots.len() < 3 {
        return Err(Error::FitFailure("type data not uniquely determined".into()));
    }
    Ok(Abc::new(r.get(0, 3).clone(), r.get(1, 3).clone(), r.get(2, 3).clone()))
}

/// Completions for `d <= 1`: type I takes `a = 0`, type II takes `c = 0`,
/// type III takes `c = 1`; for `d = 0` everything but `a` is trivial.
fn canonical_small(family: &Family, field: Field, seq: &[Elem]) -> Result<Abc> {
    let (zero, one) = (field.zero(), field.one());
    let half = field.from_ratio(1, 2)?;
    if seq.len() == 1 {
        let c = if matches!(family, Family::III) { one } else { zero.clone() };
        return Ok(Abc::new(seq[0].clone(), zero, c));
    }
    let (t0, t1) = (&seq[0], &seq[1]);
    Ok(match family {
        Family::I { q } => {
            // b q^-1 + c q = θ_0, b q + c q^-1 = θ_1
            let qi = q.inv()?;
            let det = &qi.square() - &q.square();
            let b = (&(t0 * &qi) - &(t1 * q)).checked_div(&det)?;
            let c = (&(t1 * &qi) - &(t0 * q)).checked_div(&det)?;
            Abc::new(zero, b, c)
        }
        Family::II => Abc::new(&(t0 + t1) * &half, t1 - t0, zero),
        Family::III => Abc::new(&(&(t0 + t1) + &one) * &half, &(t0 - t1) * &half, one),
        Family::IV => unreachable!("type IV has d = 3"),
    })
}

fn render(seq: &[Elem]) -> String {
    let items: Vec<String> = seq.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Builds and validates the array described by `td` with split sequence `zeta`.
pub fn generate_parameter_array(td: &TypeData, d: usize, zeta: Vec<Elem>) -> Result<ParameterArray> {
    td.validate(d)?;
    let field = td.field();
    let theta = td.sequence(d, false)?;
    let theta_star = td.sequence(d, true)?;
    let beta = td.family.beta(field)?;
    ParameterArray::new(field, theta, theta_star, zeta, Some(beta), td.q().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Elem {
        Field::Rationals.from_ratio(n, d).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn base_of_arithmetic_progression() {
        let theta = ints(&[3, 1, -1, -3]);
        assert_eq!(compute_base(&theta, &theta).unwrap(), q(2, 1));
        assert!(compute_base(&ints(&[1, 2, 3]), &ints(&[1, 2, 3])).is_err());
    }

    #[test]
    fn base_of_geometric_sequence() {
        // θ_i = 2^(3 - 2i)
        let theta = vec![q(8, 1), q(2, 1), q(1, 2), q(1, 8)];
        assert_eq!(compute_base(&theta, &theta).unwrap(), q(17, 4));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_type(&q(17, 4), Field::Rationals, 5).unwrap(), TdType::I);
        assert_eq!(classify_type(&q(2, 1), Field::Rationals, 5).unwrap(), TdType::II);
        assert_eq!(classify_type(&q(-2, 1), Field::Rationals, 4).unwrap(), TdType::IIIPlus);
        assert_eq!(classify_type(&q(-2, 1), Field::Rationals, 3).unwrap(), TdType::IIIMinus);
        assert_eq!(classify_type(&Field::Gf4.zero(), Field::Gf4, 3).unwrap(), TdType::IV);
        assert!(classify_type(&Field::Gf4.zero(), Field::Gf4, 2).is_err());
    }

    #[test]
    fn type_one_generation_example() {
        let f = Field::Rationals;
        let td = TypeData {
            family: Family::I { q: q(2, 1) },
            eig: Abc::new(f.zero(), f.one(), f.zero()),
            dual: Abc::new(f.zero(), f.zero(), f.one()),
        };
        let pa = generate_parameter_array(&td, 2, vec![f.one(), q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(pa.theta(), &[q(1, 4), q(1, 1), q(4, 1)]);
        assert_eq!(pa.theta_star(), &[q(4, 1), q(1, 1), q(1, 4)]);
    }

    #[test]
    fn type_two_needs_large_characteristic() {
        let f5 = Field::prime(5).unwrap();
        let td = TypeData {
            family: Family::II,
            eig: Abc::new(f5.zero(), f5.one(), f5.zero()),
            dual: Abc::new(f5.zero(), f5.one(), f5.zero()),
        };
        let mut zeta = vec![f5.zero(); 8];
        zeta[0] = f5.one();
        let err = generate_parameter_array(&td, 7, zeta).unwrap_err();
        // θ repeats mod 5 before the characteristic check is reached
        assert!(matches!(err, Error::InvalidArray(_) | Error::Characteristic(_)));
    }

    #[test]
    fn fits_reference_sequences() {
        let f = Field::Rationals;
        let geometric: Vec<Elem> = (0..=3).map(|i| q(2, 1).powi(3 - 2 * i).unwrap()).collect();
        let pa = ParameterArray::new(
            f,
            geometric.clone(),
            geometric,
            ints(&[1, 0, 0, 0]),
            None,
            Some(q(2, 1)),
        )
        .unwrap();
        let td = pa.fit_type_data().unwrap();
        assert_eq!(td.eig, Abc::new(f.zero(), f.zero(), f.one()));

        let theta = ints(&[4, 2, 0, -2, -4]);
        let pa = ParameterArray::new(f, theta.clone(), theta, ints(&[1, 0, 0, 0, 0]), None, None).unwrap();
        let td = pa.fit_type_data().unwrap();
        assert_eq!(td.eig, Abc::new(f.zero(), q(-2, 1), f.zero()));
    }

    #[test]
    fn d1_zeta_ddown_by_hand() {
        let f = Field::Rationals;
        let pa = ParameterArray::new(f, ints(&[1, -1]), ints(&[1, -1]), ints(&[1, 2]), Some(q(2, 1)), None).unwrap();
        let down = pa.zeta_ddown().unwrap();
        // ζ_1 + (θ_0 - θ_1)(θ*_0 - θ*_1), which D4 invariance of P forces
        assert_eq!(down, ints(&[1, 6]));
    }

    #[test]
    fn words_parse() {
        assert_eq!(
            parse_word("dDs").unwrap(),
            vec![Generator::Down, Generator::DDown, Generator::Star]
        );
        assert_eq!(parse_word("↓⇓*").unwrap(), parse_word("dDs").unwrap());
        assert!(parse_word("x").is_err());
    }

    #[test]
    fn rejects_bad_arrays() {
        let f = Field::Rationals;
        assert!(ParameterArray::new(f, ints(&[1, 1]), ints(&[1, 2]), ints(&[1, 0]), Some(q(2, 1)), None).is_err());
        assert!(ParameterArray::new(f, ints(&[1, 2]), ints(&[1, 2]), ints(&[2, 0]), Some(q(2, 1)), None).is_err());
        assert!(ParameterArray::new(f, ints(&[1, 2]), ints(&[1, 2]), ints(&[1, 0]), None, None).is_err());
        assert!(ParameterArray::new(f, ints(&[1, 2]), ints(&[1, 2]), ints(&[1, 0]), Some(q(5, 1)), None).is_err());
    }
}
