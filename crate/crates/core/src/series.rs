//! Terminating hypergeometric and basic hypergeometric series, the summation
//! formulas used to locate the roots of `P̂`, and the instances of those
//! formulas produced by Leonard data.
//!
//! Basic series use base `q²`: the term of `rφs` is
//! `∏(a_i; q²)_k / (∏(b_j; q²)_k (q²; q²)_k) z^k`.

use std::fmt;
use std::str::FromStr;

use crate::brackets::Check;
use crate::drinfeld::normalized_p;
use crate::error::{Error, Result};
use crate::field::{q_pochhammer, rising_factorial, Elem, Field};
use crate::leonard::LeonardData;
use crate::params::{Family, ParameterArray, TdType, TypeData};

/// Termination orders are searched up to this bound.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    F32,
    F21,
    F10,
    Phi32,
    Phi21,
}

impl SeriesKind {
    /// Numerator and denominator parameter counts.
    pub fn shape(&self) -> (usize, usize) {
        match self {
            SeriesKind::F32 | SeriesKind::Phi32 => (3, 2),
            SeriesKind::F21 | SeriesKind::Phi21 => (2, 1),
            SeriesKind::F10 => (1, 0),
        }
    }

    pub fn is_basic(&self) -> bool {
        matches!(self, SeriesKind::Phi32 | SeriesKind::Phi21)
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::F32 => "3F2",
            SeriesKind::F21 => "2F1",
            SeriesKind::F10 => "1F0",
            SeriesKind::Phi32 => "3phi2",
            SeriesKind::Phi21 => "2phi1",
        })
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "3F2" => Ok(SeriesKind::F32),
            "2F1" => Ok(SeriesKind::F21),
            "1F0" => Ok(SeriesKind::F10),
            "3phi2" => Ok(SeriesKind::Phi32),
            "2phi1" => Ok(SeriesKind::Phi21),
            other => Err(Error::InvalidArray(format!(
                "unknown series kind `{other}` (expected 3F2, 2F1, 1F0, 3phi2 or 2phi1)"
            ))),
        }
    }
}

/// A terminating series with its detected order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    kind: SeriesKind,
    num: Vec<Elem>,
    den: Vec<Elem>,
    arg: Elem,
    q: Option<Elem>,
    order: usize,
}

impl SeriesSpec {
    /// Validates the parameter counts, the presence of `q` for basic series,
    /// termination, and nonvanishing of the denominators up to the order.
    pub fn new(kind: SeriesKind, num: Vec<Elem>, den: Vec<Elem>, arg: Elem, q: Option<Elem>) -> Result<SeriesSpec> {
        let (r, s) = kind.shape();
        if num.len() != r || den.len() != s {
            return Err(Error::InvalidArray(format!(
                "{kind} takes {r} numerator and {s} denominator parameters, got {} and {}",
                num.len(),
                den.len()
            )));
        }
        let field = arg.field();
        if num.iter().chain(&den).chain(&q).any(|x| x.field() != field) {
            return Err(Error::InvalidArray("series parameters from different fields".into()));
        }
        let q = match (kind.is_basic(), q) {
            (true, None) => return Err(Error::InvalidArray(format!("{kind} needs q"))),
            (false, Some(_)) => return Err(Error::InvalidArray(format!("{kind} takes no q"))),
            (_, q) => q,
        };
        let order = termination_order(&num, q.as_ref())?;
        let spec = SeriesSpec {
            kind,
            num,
            den,
            arg,
            q,
            order,
        };
        spec.check_denominators()?;
        Ok(spec)
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn num(&self) -> &[Elem] {
        &self.num
    }

    pub fn den(&self) -> &[Elem] {
        &self.den
    }

    pub fn arg(&self) -> &Elem {
        &self.arg
    }

    pub fn q(&self) -> Option<&Elem> {
        self.q.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> Field {
        self.arg.field()
    }

    fn base(&self) -> Option<Elem> {
        self.q.as_ref().map(Elem::square)
    }

    /// The Pochhammer factor contributed by parameter `a` going from `k` to
    /// `k + 1`: `a + k` or `1 - a p^k`.
    fn step(&self, a: &Elem, k: usize) -> Elem {
        match self.base() {
            Some(p) => &a.one_like() - &(a * &p.pow(k as u32)),
            None => a + &self.field().from_i64(k as i64),
        }
    }

    fn check_denominators(&self) -> Result<()> {
        let one = self.field().one();
        for k in 0..self.order {
            let mut factors: Vec<Elem> = self.den.iter().map(|b| self.step(b, k)).collect();
            factors.push(self.step(&one, k + usize::from(self.base().is_some())));
            if factors.iter().any(Elem::is_zero) {
                return Err(Error::UndefinedSeries(format!(
                    "a denominator factor of {} vanishes at k = {}",
                    self.kind,
                    k + 1
                )));
            }
        }
        Ok(())
    }

    /// Terms `0..=n`, built by the ratio of consecutive terms.
    pub fn terms(&self) -> Vec<Elem> {
        let field = self.field();
        let one = field.one();
        let mut out = vec![one.clone()];
        for k in 0..self.order {
            let mut ratio = self.arg.clone();
            for a in &self.num {
                ratio *= &self.step(a, k);
            }
            let mut den = self.step(&one, k + usize::from(self.base().is_some()));
            for b in &self.den {
                den *= &self.step(b, k);
            }
            let ratio = ratio.checked_div(&den).expect("denominators checked at construction");
            let next = out.last().expect("nonempty") * &ratio;
            out.push(next);
        }
        out
    }

    /// Term `k` from its closed Pochhammer form.
    pub fn term(&self, k: usize) -> Elem {
        let field = self.field();
        let poch = |a: &Elem| match self.base() {
            Some(p) => q_pochhammer(a, &p, k),
            None => rising_factorial(a, k),
        };
        let numer = self.num.iter().fold(self.arg.pow(k as u32), |acc, a| &acc * &poch(a));
        let unit = match self.base() {
            Some(p) => p.clone(),
            None => field.one(),
        };
        let denom = self.den.iter().fold(poch(&unit), |acc, b| &acc * &poch(b));
        numer.checked_div(&denom).expect("denominators checked at construction")
    }
}

/// Smallest `n` such that a numerator parameter is `-n` (ordinary) or
/// `q^(-2n)` (basic).
fn termination_order(num: &[Elem], q: Option<&Elem>) -> Result<usize> {
    let Some(first) = num.first() else {
        return Err(Error::InvalidArray("series without numerator parameters".into()));
    };
    let field = first.field();
    let pinv = match q {
        Some(q) => Some(q.square().inv().map_err(|_| Error::InvalidArray("q = 0".into()))?),
        None => None,
    };
    let mut marker = field.one();
    for n in 0..=MAX_ORDER {
        let target = match &pinv {
            Some(_) => marker.clone(),
            None => field.from_i64(-(n as i64)),
        };
        if num.contains(&target) {
            return Ok(n);
        }
        if let Some(pinv) = &pinv {
            marker = &marker * pinv;
        }
    }
    Err(Error::UndefinedSeries(format!(
        "no numerator parameter terminates the series within {MAX_ORDER} terms"
    )))
}

/// The exact finite sum.
pub fn evaluate(spec: &SeriesSpec) -> Elem {
    partial_sums(spec).pop().expect("at least one term")
}

/// `S_0, S_1, ..., S_n`.
pub fn partial_sums(spec: &SeriesSpec) -> Vec<Elem> {
    let mut acc = spec.field().zero();
    spec.terms()
        .into_iter()
        .map(|t| {
            acc += &t;
            acc.clone()
        })
        .collect()
}

/// Which variant of the q-Chu-Vandermonde sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QcvForm {
    /// Argument `q²`; the right side carries `b^n`.
    Unit,
    /// Argument `c q^(2n) / b`.
    Shifted,
}

/// A summation formula instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identity {
    /// `3φ2(q^(-2n), a, b; c, ab q^(2-2n)/c; q², q²)`.
    QSaalschutz { n: usize, a: Elem, b: Elem, c: Elem, q: Elem },
    /// `3F2(-n, a, b; c, 1+a+b-c-n; 1)`.
    Saalschutz { n: usize, a: Elem, b: Elem, c: Elem },
    /// `2F1(-n, b; c; 1)`.
    ChuVandermonde { n: usize, b: Elem, c: Elem },
    QChuVandermonde { n: usize, b: Elem, c: Elem, q: Elem, form: QcvForm },
    /// `1F0(-n; ; z) = (1 - z)^n`.
    Binomial { n: usize, z: Elem },
}

fn na(what: impl Into<String>) -> Error {
    Error::NotApplicable(what.into())
}

fn div(a: &Elem, b: &Elem, what: &str) -> Result<Elem> {
    a.checked_div(b).map_err(|_| na(format!("{what} is zero")))
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::QSaalschutz { .. } => "q-saalschutz",
            Identity::Saalschutz { .. } => "saalschutz",
            Identity::ChuVandermonde { .. } => "chu-vandermonde",
            Identity::QChuVandermonde { form: QcvForm::Unit, .. } => "q-chu-vandermonde",
            Identity::QChuVandermonde { form: QcvForm::Shifted, .. } => "q-chu-vandermonde-shifted",
            Identity::Binomial { .. } => "binomial",
        }
    }

    fn field(&self) -> Field {
        match self {
            Identity::QSaalschutz { q, .. } | Identity::QChuVandermonde { q, .. } => q.field(),
            Identity::Saalschutz { c, .. } | Identity::ChuVandermonde { c, .. } => c.field(),
            Identity::Binomial { z, .. } => z.field(),
        }
    }

    /// The series side.
    pub fn lhs(&self) -> Result<SeriesSpec> {
        let field = self.field();
        let minus_n = |n: usize| field.from_i64(-(n as i64));
        let q_minus_n = |q: &Elem, n: usize| -> Result<Elem> {
            let p = q.square();
            if q_pochhammer(&p, &p, n).is_zero() {
                return Err(na(format!("q² has multiplicative order at most {n}")));
            }
            q.powi(-2 * n as i64).map_err(|_| na("q"))
        };
        let spec = match self {
            Identity::QSaalschutz { n, a, b, c, q } => {
                let p = q.square();
                let top = &(a * b) * &p.powi(1 - *n as i64).map_err(|_| na("q"))?;
                let e = div(&top, c, "c")?;
                SeriesSpec::new(
                    SeriesKind::Phi32,
                    vec![q_minus_n(q, *n)?, a.clone(), b.clone()],
                    vec![c.clone(), e],
                    p,
                    Some(q.clone()),
                )
            }
            Identity::Saalschutz { n, a, b, c } => {
                let e = &(&(&(&field.one() + a) + b) - c) - &field.from_i64(*n as i64);
                SeriesSpec::new(SeriesKind::F32, vec![minus_n(*n), a.clone(), b.clone()], vec![c.clone(), e], field.one(), None)
            }
            Identity::ChuVandermonde { n, b, c } => {
                SeriesSpec::new(SeriesKind::F21, vec![minus_n(*n), b.clone()], vec![c.clone()], field.one(), None)
            }
            Identity::QChuVandermonde { n, b, c, q, form } => {
                let p = q.square();
                let arg = match form {
                    QcvForm::Unit => p,
                    QcvForm::Shifted => div(&(c * &p.pow(*n as u32)), b, "b")?,
                };
                SeriesSpec::new(
                    SeriesKind::Phi21,
                    vec![q_minus_n(q, *n)?, b.clone()],
                    vec![c.clone()],
                    arg,
                    Some(q.clone()),
                )
            }
            Identity::Binomial { n, z } => SeriesSpec::new(SeriesKind::F10, vec![minus_n(*n)], vec![], z.clone(), None),
        };
        spec.map_err(|e| match e {
            Error::UndefinedSeries(m) => na(m),
            other => other,
        })
    }

    /// The closed-form side.
    pub fn rhs(&self) -> Result<Elem> {
        match self {
            Identity::QSaalschutz { n, a, b, c, q } => {
                let p = q.square();
                let poch = |x: &Elem| q_pochhammer(x, &p, *n);
                let num = &poch(&div(c, a, "a")?) * &poch(&div(c, b, "b")?);
                let den = &poch(c) * &poch(&div(c, &(a * b), "ab")?);
                div(&num, &den, "the closed-form denominator")
            }
            Identity::Saalschutz { n, a, b, c } => {
                let poch = |x: &Elem| rising_factorial(x, *n);
                let num = &poch(&(c - a)) * &poch(&(c - b));
                let den = &poch(c) * &poch(&(&(c - a) - b));
                div(&num, &den, "the closed-form denominator")
            }
            Identity::ChuVandermonde { n, b, c } => {
                div(&rising_factorial(&(c - b), *n), &rising_factorial(c, *n), "(c)_n")
            }
            Identity::QChuVandermonde { n, b, c, q, form } => {
                let p = q.square();
                let ratio = div(&q_pochhammer(&div(c, b, "b")?, &p, *n), &q_pochhammer(c, &p, *n), "(c; q²)_n")?;
                Ok(match form {
                    QcvForm::Unit => &ratio * &b.pow(*n as u32),
                    QcvForm::Shifted => ratio,
                })
            }
            Identity::Binomial { n, z } => Ok((&z.one_like() - z).pow(*n as u32)),
        }
    }
}

/// Evaluates both sides; `NotApplicable` when a side is undefined.
pub fn check_identity(id: &Identity) -> Result<Check<Elem>> {
    let lhs = evaluate(&id.lhs()?);
    let rhs = id.rhs()?;
    Ok(if lhs == rhs { Check::Holds } else { Check::Fails { lhs, rhs } })
}

pub fn check_q_saalschutz(n: usize, a: &Elem, b: &Elem, c: &Elem, q: &Elem) -> Result<Check<Elem>> {
    check_identity(&Identity::QSaalschutz {
        n,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        q: q.clone(),
    })
}

pub fn check_saalschutz(n: usize, a: &Elem, b: &Elem, c: &Elem) -> Result<Check<Elem>> {
    check_identity(&Identity::Saalschutz {
        n,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
    })
}

pub fn check_chu_vandermonde(n: usize, b: &Elem, c: &Elem) -> Result<Check<Elem>> {
    check_identity(&Identity::ChuVandermonde {
        n,
        b: b.clone(),
        c: c.clone(),
    })
}

pub fn check_q_chu_vandermonde(n: usize, b: &Elem, c: &Elem, q: &Elem, form: QcvForm) -> Result<Check<Elem>> {
    check_identity(&Identity::QChuVandermonde {
        n,
        b: b.clone(),
        c: c.clone(),
        q: q.clone(),
        form,
    })
}

/// Summand `n` of `P̂(λ) / ζ_d`:
/// `p̂_d(λ) ... p̂_(d-n+1)(λ) / (φ_d ... φ_(d-n+1))`, for `n = 0..=d`.
pub fn adjugate_terms(ld: &LeonardData, lambda: &Elem) -> Result<Vec<Elem>> {
    let pa = ld.parameter_array()?;
    let field = pa.field();
    let mut out = vec![field.one()];
    for k in 0..ld.d {
        let i = ld.d - k;
        let value = normalized_p(i, &pa, &ld.type_data)?.eval(lambda);
        let next = &(out.last().expect("nonempty") * &value) * &ld.phi[i - 1].inv()?;
        out.push(next);
    }
    Ok(out)
}

/// Pairs summands `2j-1` and `2j` of a sum with an even number of terms,
/// keeping the first and last alone: `s_0, s_1 + s_2, ..., s_(d-2) + s_(d-1), s_d`.
pub fn regroup_odd_even(terms: &[Elem]) -> Result<Vec<Elem>> {
    let len = terms.len();
    if len < 2 || len % 2 != 0 {
        return Err(Error::Dimension(format!(
            "regrouping needs an even number of at least two summands, got {len}"
        )));
    }
    let d = len - 1;
    let mut out = vec![terms[0].clone()];
    for n in (2..d).step_by(2) {
        out.push(&terms[n - 1] + &terms[n]);
    }
    out.push(terms[d].clone());
    Ok(out)
}

/// One instantiation of the series argument behind a root formula: at
/// `lambda`, `P̂(λ) = prefactor · Σ series`, and `identity` sums the series
/// in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline {
    pub lambda: Elem,
    pub series: SeriesSpec,
    pub prefactor: Elem,
    pub identity: Identity,
    /// For type III-, the series terms are the regrouped summands.
    pub regrouped: bool,
}

/// Type I data after `q -> 1/q`, `b <-> c` on both sides. The eigenvalue
/// sequences, `φ`, `ϕ`, `t` and `P̂` are unchanged.
fn flip_type_one(td: &TypeData) -> Result<TypeData> {
    let Family::I { q } = &td.family else {
        return Err(na("flip applies to type I"));
    };
    let mut out = td.clone();
    out.family = Family::I { q: q.inv()? };
    for abc in [&mut out.eig, &mut out.dual] {
        std::mem::swap(&mut abc.b, &mut abc.c);
    }
    Ok(out)
}

/// Builds the series instance for `ld` from the free parameter `x`. For type
/// I with `b b* c c* ≠ 0`, `λ = x + b b* c c*/x`; for type II with
/// `c c* ≠ 0`, `x² = 4λcc* + b²c*² + b*²c²`; for type III-,
/// `x² = λcc* + b²c*² + b*²c²`; otherwise `λ = x`.
pub fn proof_pipeline(ld: &LeonardData, x: &Elem) -> Result<Pipeline> {
    let pa = ld.parameter_array()?;
    let prefactor = pa.zeta()[ld.d].clone();
    let field = pa.field();
    let d = ld.d;
    let (e, s) = (&ld.type_data.eig, &ld.type_data.dual);
    let bb = &e.b * &s.b;
    let cc = &e.c * &s.c;
    let t = &ld.t;
    let make = |lambda: Elem, identity: Identity, regrouped: bool| -> Result<Pipeline> {
        Ok(Pipeline {
            lambda,
            series: identity.lhs()?,
            prefactor: prefactor.clone(),
            identity,
            regrouped,
        })
    };
    match ld.ty {
        TdType::I => {
            let q = ld.type_data.q().expect("type I").clone();
            if !(&bb * &cc).is_zero() {
                let psi = ld.psi.as_ref().ok_or(Error::MissingPsi)?;
                let lambda = x + &div(&(&bb * &cc), x, "x")?;
                let qd = q.powi(1 - d as i64)?;
                let identity = Identity::QSaalschutz {
                    n: d,
                    a: div(x, &bb, "bb*")?,
                    b: div(&cc, x, "x")?,
                    c: div(&(&qd * psi), &bb, "bb*")?,
                    q,
                };
                return make(lambda, identity, false);
            }
            if bb.is_zero() && cc.is_zero() {
                return Err(na("b b* = c c* = 0"));
            }
            // bring the vanishing product onto b b*
            let (q, cc) = if bb.is_zero() {
                (q, cc)
            } else {
                let flipped = flip_type_one(&ld.type_data)?;
                (flipped.q().expect("type I").clone(), &flipped.eig.c * &flipped.dual.c)
            };
            let lambda = x.clone();
            if t.is_zero() {
                let identity = Identity::QChuVandermonde {
                    n: d,
                    b: div(&lambda, &cc, "cc*")?,
                    c: field.zero(),
                    q: q.inv()?,
                    form: QcvForm::Unit,
                };
                return make(lambda, identity, false);
            }
            let identity = Identity::QChuVandermonde {
                n: d,
                b: div(&cc, &lambda, "λ")?,
                c: div(&(&q.powi(1 - d as i64)? * &cc), t, "t")?,
                q,
                form: QcvForm::Shifted,
            };
            make(lambda, identity, false)
        }
        TdType::II => {
            let two = field.from_i64(2);
            let half_d = field.from_ratio(1 - d as i64, 2)?;
            if !cc.is_zero() {
                let psi = ld.psi.as_ref().ok_or(Error::MissingPsi)?;
                let sum = &(&e.b * &s.c) + &(&e.c * &s.b);
                let rest = &(&e.b * &s.c).square() + &(&s.b * &e.c).square();
                let lambda = div(&(&x.square() - &rest), &(&field.from_i64(4) * &cc), "cc*")?;
                let two_cc = &two * &cc;
                let identity = Identity::Saalschutz {
                    n: d,
                    a: div(&(&sum + x), &two_cc, "cc*")?,
                    b: div(&(&sum - x), &two_cc, "cc*")?,
                    c: &div(&(&sum + psi), &two_cc, "cc*")? + &half_d,
                };
                return make(lambda, identity, false);
            }
            let lambda = x.clone();
            if e.c.is_zero() && s.c.is_zero() {
                let z = div(&(&bb - &(&two * &lambda)), &(&bb - &(&two * t)), "bb* - 2t")?;
                return make(lambda, Identity::Binomial { n: d, z }, false);
            }
            // c = 0 after swapping the two sides if needed
            let (b, bs, cs) = if e.c.is_zero() { (&e.b, &s.b, &s.c) } else { (&s.b, &e.b, &e.c) };
            let base = div(bs, &(&two * cs), "c*")?;
            let bcs = b * cs;
            let identity = Identity::ChuVandermonde {
                n: d,
                b: &base - &div(&lambda, &bcs, "bc*")?,
                c: &(&base - &div(t, &bcs, "bc*")?) + &half_d,
            };
            make(lambda, identity, false)
        }
        TdType::IIIMinus => {
            let psi = ld.psi.as_ref().ok_or(Error::MissingPsi)?;
            let sum = &(&e.b * &s.c) + &(&e.c * &s.b);
            let rest = &(&e.b * &s.c).square() + &(&s.b * &e.c).square();
            let lambda = div(&(&x.square() - &rest), &cc, "cc*")?;
            let two_cc = &field.from_i64(2) * &cc;
            let quarter = field.from_ratio(1 - d as i64, 4)?;
            let identity = Identity::Saalschutz {
                n: (d + 1) / 2,
                a: div(&(x - &sum), &two_cc, "cc*")?,
                b: -&div(&(x + &sum), &two_cc, "cc*")?,
                c: &quarter - &div(&(&sum - psi), &two_cc, "cc*")?,
            };
            make(lambda, identity, true)
        }
        TdType::IV | TdType::IIIPlus => Err(na(format!("no series argument for type {}", ld.ty))),
    }
}

/// Outcome of running a pipeline against the polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    /// Series terms equal the (possibly regrouped) summands of `P̂(λ)/ζ_d`.
    pub terms_match: bool,
    /// `prefactor · Σ series = P̂(λ)`.
    pub value_matches: bool,
    pub certificate: Check<Elem>,
}

impl PipelineReport {
    pub fn holds(&self) -> bool {
        self.terms_match && self.value_matches && self.certificate.holds()
    }
}

pub fn run_pipeline(ld: &LeonardData, pipeline: &Pipeline) -> Result<PipelineReport> {
    let pa: ParameterArray = ld.parameter_array()?;
    let summands = adjugate_terms(ld, &pipeline.lambda)?;
    let summands = if pipeline.regrouped { regroup_odd_even(&summands)? } else { summands };
    // terms past an early termination are zero
    let mut terms = pipeline.series.terms();
    terms.resize(summands.len().max(terms.len()), pa.field().zero());
    let terms_match = summands == terms;
    let p_hat = crate::drinfeld::normalized_drinfeld(&pa, &ld.type_data)?;
    let value_matches = &pipeline.prefactor * &evaluate(&pipeline.series) == p_hat.eval(&pipeline.lambda);
    Ok(PipelineReport {
        terms_match,
        value_matches,
        certificate: check_identity(&pipeline.identity)?,
    })
}
