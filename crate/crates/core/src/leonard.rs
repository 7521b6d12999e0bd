//! Leonard systems: the split sequences `φ`, `ϕ` in terms of `t` and `ψ`,
//! closed-form roots of `P̂`, and a matrix realization used as an oracle for
//! the split sequence.

use crate::error::{Error, Result};
use crate::field::{sqrt_in_field, Elem, Field};
use crate::linalg::{intersect, Matrix};
use crate::params::{generate_parameter_array, Family, ParameterArray, TdType, TypeData};

/// Split-sequence data of a Leonard system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeonardData {
    pub ty: TdType,
    pub d: usize,
    pub type_data: TypeData,
    /// `t` for types I, II, III-; the free scalar `φ` for type IV.
    pub t: Elem,
    pub psi: Option<Elem>,
    pub phi: Vec<Elem>,
    pub phi2: Vec<Elem>,
}

impl LeonardData {
    /// `ζ_i = φ_1 ... φ_i`.
    pub fn zeta(&self) -> Vec<Elem> {
        zeta_from_phi(self.type_data.field(), &self.phi)
    }

    /// The parameter array `(θ; θ*; ζ)` of this system.
    pub fn parameter_array(&self) -> Result<ParameterArray> {
        generate_parameter_array(&self.type_data, self.d, self.zeta())
    }
}

fn int(field: Field, n: i64) -> Elem {
    field.from_i64(n)
}

/// `i - (d+1)/2`.
fn centered(field: Field, d: usize, i: usize) -> Result<Elem> {
    Ok(&int(field, i as i64) - &field.from_ratio(d as i64 + 1, 2)?)
}

fn check_type(ty: TdType, td: &TypeData, d: usize) -> Result<()> {
    let ok = matches!(
        (ty, &td.family),
        (TdType::I, Family::I { .. })
            | (TdType::II, Family::II)
            | (TdType::IIIMinus, Family::III)
            | (TdType::IV, Family::IV)
    );
    if !ok {
        return Err(Error::InvalidType(format!(
            "no Leonard parameterization for type {ty} with this type data"
        )));
    }
    if ty == TdType::IIIMinus && d % 2 == 0 {
        return Err(Error::InvalidType("type III- needs d odd".into()));
    }
    if ty == TdType::IV && d != 3 {
        return Err(Error::InvalidType("type IV requires d = 3".into()));
    }
    td.validate(d)
}

/// `b b*`, `c c*`, `b c* + c b*` and friends.
struct Products {
    bb: Elem,
    cc: Elem,
    bc: Elem,
    cb: Elem,
}

impl Products {
    fn of(td: &TypeData) -> Products {
        let (e, s) = (&td.eig, &td.dual);
        Products {
            bb: &e.b * &s.b,
            cc: &e.c * &s.c,
            bc: &e.b * &s.c,
            cb: &e.c * &s.b,
        }
    }
}

/// Right-hand side of the quadratic `ψ` satisfies in types II and III-:
/// `k t c c* + b² c*² + b*² c²` with `k = 4` or `1`.
fn psi_square_target(td: &TypeData, t: &Elem, k: i64) -> Elem {
    let field = td.field();
    let (e, s) = (&td.eig, &td.dual);
    let pr = Products::of(td);
    &(&(&int(field, k) * &(t * &pr.cc)) + &(&e.b * &s.c).square()) + &(&s.b * &e.c).square()
}

/// The two linear factors of `c c* φ_1` in type IV, shifted by `ψ`.
fn iv_terms(td: &TypeData) -> [Elem; 4] {
    let (e, s) = (&td.eig, &td.dual);
    // a c* + a* c, b c* + b* c, b c* + a* c, a c* + b* c
    [
        &(&e.a * &s.c) + &(&s.a * &e.c),
        &(&e.b * &s.c) + &(&s.b * &e.c),
        &(&e.b * &s.c) + &(&s.a * &e.c),
        &(&e.a * &s.c) + &(&s.b * &e.c),
    ]
}

/// Whether `psi` satisfies the defining equation of its type.
pub fn psi_satisfies(ty: TdType, td: &TypeData, t: &Elem, psi: &Elem) -> bool {
    let pr = Products::of(td);
    match ty {
        TdType::I => match psi.inv() {
            Ok(inv) => &(psi + &(&(&pr.bb * &pr.cc) * &inv)) == t,
            Err(_) => false,
        },
        TdType::II => psi.square() == psi_square_target(td, t, 4),
        TdType::IIIMinus => psi.square() == psi_square_target(td, t, 1),
        TdType::IV => {
            let Ok(phi) = iv_phi(td, t) else { return false };
            match iv_factored(td, psi) {
                Ok(f) => f == phi,
                Err(_) => false,
            }
        }
        TdType::IIIPlus => false,
    }
}

/// `(φ, ϕ)` for type IV from the free scalar.
fn iv_phi(td: &TypeData, phi1: &Elem) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let (e, s) = (&td.eig, &td.dual);
    let ab = &e.a + &e.b;
    let abs = &s.a + &s.b;
    let cc = &e.c * &s.c;
    let phi = vec![
        phi1.clone(),
        cc.clone(),
        &(phi1 + &(&ab * &s.c)) + &(&e.c * &abs),
    ];
    let phi2 = vec![
        phi1 + &(&ab * &(&abs + &s.c)),
        cc,
        phi1 + &(&(&ab + &e.c) * &abs),
    ];
    Ok((phi, phi2))
}

/// `(φ, ϕ)` for type IV rebuilt from `ψ` via the four product equations.
fn iv_factored(td: &TypeData, psi: &Elem) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let cc = &td.eig.c * &td.dual.c;
    let s = &cc * psi;
    let [x, y, u, w] = iv_terms(td);
    let f = |p: &Elem, r: &Elem| -> Result<Elem> {
        let lhs = &(p + &s) * &(&(r + &cc) + &s);
        Ok(lhs.checked_div(&cc)?)
    };
    Ok((
        vec![f(&x, &y)?, cc.clone(), f(&y, &x)?],
        vec![f(&u, &w)?, cc.clone(), f(&w, &u)?],
    ))
}

/// `φ_i` and `ϕ_i` from the unfactored formulas.
fn unfactored(ty: TdType, td: &TypeData, d: usize, t: &Elem) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let field = td.field();
    let pr = Products::of(td);
    let mut phi = Vec::with_capacity(d);
    let mut phi2 = Vec::with_capacity(d);
    match ty {
        TdType::I => {
            let q = td.q().expect("type I data carries q");
            for i in 1..=d {
                let (i, di) = (i as i64, d as i64);
                let pre = &(&q.pow(i as u32) - &q.powi(-i)?) * &(&q.powi(di - i + 1)? - &q.powi(i - di - 1)?);
                let lo = q.powi(2 * i - di - 1)?;
                let hi = q.powi(di + 1 - 2 * i)?;
                phi.push(&pre * &(&(t - &(&pr.bb * &lo)) - &(&pr.cc * &hi)));
                phi2.push(&pre * &(&(t - &(&pr.cb * &lo)) - &(&pr.bc * &hi)));
            }
        }
        TdType::II => {
            let half_bb = pr.bb.checked_div(&int(field, 2))?;
            let sum = &pr.bc + &pr.cb;
            let diff = &pr.cb - &pr.bc;
            for i in 1..=d {
                let m = centered(field, d, i)?;
                let pre = int(field, (i * (d - i + 1)) as i64);
                let quad = &pr.cc * &m.square();
                phi.push(&pre * &(&(&(t - &half_bb) + &(&sum * &m)) - &quad));
                phi2.push(&pre * &(&(&(t + &half_bb) + &(&diff * &m)) - &quad));
            }
        }
        TdType::IIIMinus => {
            let two = int(field, 2);
            let sum = &pr.bc + &pr.cb;
            let diff = &pr.bc - &pr.cb;
            let two_bb = &two * &pr.bb;
            for i in 1..=d {
                if i % 2 == 0 {
                    let x = &pr.cc * &int(field, (i * (d - i + 1)) as i64);
                    phi.push(x.clone());
                    phi2.push(x);
                } else {
                    let m = centered(field, d, i)?;
                    let quad = &pr.cc * &m.square();
                    phi.push(&(&(t - &two_bb) - &(&(&two * &sum) * &m)) - &quad);
                    phi2.push(&(&(t + &two_bb) + &(&(&two * &diff) * &m)) - &quad);
                }
            }
        }
        TdType::IV => return iv_phi(td, t),
        TdType::IIIPlus => unreachable!("rejected by check_type"),
    }
    Ok((phi, phi2))
}

/// `φ_i` and `ϕ_i` from the factored formulas in `ψ`, for the subcases that
/// have one. `None` when the type's factored form does not apply.
pub fn factored_phi(ty: TdType, td: &TypeData, d: usize, psi: &Elem) -> Result<Option<(Vec<Elem>, Vec<Elem>)>> {
    let field = td.field();
    let pr = Products::of(td);
    let mut phi = Vec::with_capacity(d);
    let mut phi2 = Vec::with_capacity(d);
    match ty {
        TdType::I => {
            if (&pr.bb * &pr.cc).is_zero() {
                return Ok(None);
            }
            let q = td.q().expect("type I data carries q");
            let psi_inv = psi.inv()?;
            for i in 1..=d {
                let (i, di) = (i as i64, d as i64);
                let pre = &(&q.pow(i as u32) - &q.powi(-i)?) * &(&q.powi(di - i + 1)? - &q.powi(i - di - 1)?);
                let left = |x: &Elem| -> Result<Elem> {
                    Ok(&q.powi(-i)? - &(&(x * &psi_inv) * &q.powi(i - di - 1)?))
                };
                let right = |x: &Elem| -> Result<Elem> {
                    Ok(&(&q.powi(i)? * psi) - &(x * &q.powi(di - i + 1)?))
                };
                phi.push(&(&pre * &left(&pr.bb)?) * &right(&pr.cc)?);
                phi2.push(&(&pre * &left(&pr.cb)?) * &right(&pr.bc)?);
            }
        }
        TdType::II => {
            if pr.cc.is_zero() {
                return Ok(None);
            }
            let two = int(field, 2);
            let sum = &pr.bc + &pr.cb;
            let diff = &pr.bc - &pr.cb;
            for i in 1..=d {
                let cm = &pr.cc * &centered(field, d, i)?;
                let pre = int(field, (i * (d - i + 1)) as i64).checked_div(&pr.cc)?;
                let half = |x: Elem| x.checked_div(&two);
                let f1 = &half(psi + &sum)? - &cm;
                let f2 = &half(psi - &sum)? + &cm;
                let g1 = &half(psi - &diff)? - &cm;
                let g2 = &half(psi + &diff)? + &cm;
                phi.push(&(&pre * &f1) * &f2);
                phi2.push(&(&pre * &g1) * &g2);
            }
        }
        TdType::IIIMinus => {
            let sum = &pr.bc + &pr.cb;
            let diff = &pr.bc - &pr.cb;
            for i in 1..=d {
                if i % 2 == 0 {
                    let x = &pr.cc * &int(field, (i * (d - i + 1)) as i64);
                    phi.push(x.clone());
                    phi2.push(x);
                } else {
                    let cm = &pr.cc * &centered(field, d, i)?;
                    let f = (&(&(psi - &sum) - &cm) * &(&(psi + &sum) + &cm)).checked_div(&pr.cc)?;
                    let g = (&(&(psi + &diff) - &cm) * &(&(psi - &diff) + &cm)).checked_div(&pr.cc)?;
                    phi.push(f);
                    phi2.push(g);
                }
            }
        }
        TdType::IV => return iv_factored(td, psi).map(Some),
        TdType::IIIPlus => return Ok(None),
    }
    Ok(Some((phi, phi2)))
}

/// Builds the Leonard data for `t` (or `φ` in type IV) and an optional `ψ`.
pub fn phi_from_params(ty: TdType, td: &TypeData, d: usize, t: &Elem, psi: Option<&Elem>) -> Result<LeonardData> {
    check_type(ty, td, d)?;
    if let Some(psi) = psi {
        if !psi_satisfies(ty, td, t, psi) {
            return Err(Error::InvalidPsi);
        }
    }
    let (phi, phi2) = unfactored(ty, td, d, t)?;
    if let Some(i) = phi.iter().position(Elem::is_zero) {
        return Err(Error::NotLeonard(format!("φ_{} = 0", i + 1)));
    }
    if let Some(i) = phi2.iter().position(Elem::is_zero) {
        return Err(Error::NotLeonard(format!("ϕ_{} = 0", i + 1)));
    }
    Ok(LeonardData {
        ty,
        d,
        type_data: td.clone(),
        t: t.clone(),
        psi: psi.cloned(),
        phi,
        phi2,
    })
}

/// `ζ_0 = 1`, `ζ_i = φ_1 ... φ_i`.
pub fn zeta_from_phi(field: Field, phi: &[Elem]) -> Vec<Elem> {
    let mut out = vec![field.one()];
    for p in phi {
        let next = out.last().expect("nonempty") * p;
        out.push(next);
    }
    out
}

/// Every in-field solution of the type's equation for `ψ`.
pub fn solve_psi(ty: TdType, td: &TypeData, t: &Elem) -> Result<Vec<Elem>> {
    let field = td.field();
    let pr = Products::of(td);
    let pm = |r: Elem| {
        let neg = -&r;
        if neg == r {
            vec![r]
        } else {
            vec![r, neg]
        }
    };
    Ok(match ty {
        TdType::I => {
            // ψ² - t ψ + b b* c c* = 0, ψ ≠ 0
            let prod = &pr.bb * &pr.cc;
            let disc = &t.square() - &(&int(field, 4) * &prod);
            let two = int(field, 2);
            match sqrt_in_field(&disc) {
                Some(r) => pm(r)
                    .into_iter()
                    .map(|r| (t + &r).checked_div(&two))
                    .collect::<std::result::Result<Vec<_>, _>>()?
                    .into_iter()
                    .filter(|x| !x.is_zero())
                    .collect(),
                None => Vec::new(),
            }
        }
        TdType::II => sqrt_in_field(&psi_square_target(td, t, 4)).map(pm).unwrap_or_default(),
        TdType::IIIMinus => sqrt_in_field(&psi_square_target(td, t, 1)).map(pm).unwrap_or_default(),
        TdType::IV => match field.elements() {
            Some(all) => all
                .into_iter()
                .filter(|psi| psi_satisfies(ty, td, t, psi))
                .collect(),
            None => Vec::new(),
        },
        TdType::IIIPlus => {
            return Err(Error::InvalidType("no Leonard parameterization for type III+".into()))
        }
    })
}

/// `(a+b)/c + (a*+b*)/c* + 1`, the gap between the two type IV solutions.
pub fn iv_psi_shift(td: &TypeData) -> Result<Elem> {
    let (e, s) = (&td.eig, &td.dual);
    let x = (&e.a + &e.b).checked_div(&e.c)?;
    let y = (&s.a + &s.b).checked_div(&s.c)?;
    Ok(&(&x + &y) + &td.field().one())
}

fn need_psi(ld: &LeonardData) -> Result<&Elem> {
    ld.psi.as_ref().ok_or(Error::MissingPsi)
}

/// The roots of `P̂`: `d` of them in types I and II, one per odd index in
/// type III-, two in type IV.
pub fn roots(ld: &LeonardData) -> Result<Vec<Elem>> {
    let td = &ld.type_data;
    let field = td.field();
    let d = ld.d;
    let t = &ld.t;
    let pr = Products::of(td);
    match ld.ty {
        TdType::I => {
            let q = td.q().expect("type I data carries q");
            let prod = &pr.bb * &pr.cc;
            let di = d as i64;
            if prod.is_zero() {
                (1..=d as i64)
                    .map(|i| Ok(t * &q.powi(di + 1 - 2 * i)?))
                    .collect()
            } else {
                let psi = need_psi(ld)?;
                let scaled = prod.checked_div(psi)?;
                (1..=d as i64)
                    .map(|i| {
                        Ok(&(psi * &q.powi(di + 1 - 2 * i)?) + &(&scaled * &q.powi(2 * i - di - 1)?))
                    })
                    .collect()
            }
        }
        TdType::II => {
            let psi = if pr.cc.is_zero() { None } else { Some(need_psi(ld)?) };
            (1..=d)
                .map(|i| {
                    let m = centered(field, d, i)?;
                    Ok(match psi {
                        Some(psi) => &(t + &(psi * &m)) + &(&pr.cc * &m.square()),
                        None => t + &(&(&pr.bc + &pr.cb) * &m),
                    })
                })
                .collect()
        }
        TdType::IIIMinus => {
            let psi = need_psi(ld)?;
            let two_psi = psi + psi;
            (1..=d)
                .filter(|i| i % 2 == 1)
                .map(|i| {
                    let m = centered(field, d, i)?;
                    Ok(&(t + &(&two_psi * &m)) + &(&pr.cc * &m.square()))
                })
                .collect()
        }
        TdType::IV => {
            let psi = need_psi(ld)?;
            let (e, s) = (&td.eig, &td.dual);
            let base = &(&e.a * &s.b) + &(&e.b * &s.a);
            let s_psi = &pr.cc * psi;
            let x = &(&s_psi + &(&e.a * &s.c)) + &(&s.b * &e.c);
            let y = &(&s_psi + &(&s.a * &e.c)) + &(&e.b * &s.c);
            let z = |x: &Elem, y: &Elem| -> Result<Elem> { Ok(&base + &(x * y).checked_div(&pr.cc)?) };
            Ok(vec![z(&x, &y)?, z(&(&x + &pr.cc), &(&y + &pr.cc))?])
        }
        TdType::IIIPlus => Err(Error::InvalidType("no Leonard parameterization for type III+".into())),
    }
}

/// `A` and `A*` acting on `F^(d+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPair {
    pub a: Matrix,
    pub a_star: Matrix,
}

/// The split-basis realization: `A` lower bidiagonal with diagonal `θ` and
/// ones below it, `A*` upper bidiagonal with diagonal `θ*` and `φ` above it.
pub fn realize_matrices(theta: &[Elem], theta_star: &[Elem], phi: &[Elem]) -> Result<MatrixPair> {
    let n = theta.len();
    if n == 0 || theta_star.len() != n || phi.len() + 1 != n {
        return Err(Error::Dimension(format!(
            "need d+1 eigenvalues, d+1 dual eigenvalues and d split values, got {}, {}, {}",
            theta.len(),
            theta_star.len(),
            phi.len()
        )));
    }
    let field = theta[0].field();
    let mut a = Matrix::zero(field, n, n);
    let mut a_star = Matrix::zero(field, n, n);
    for i in 0..n {
        a.set(i, i, theta[i].clone());
        a_star.set(i, i, theta_star[i].clone());
        if i + 1 < n {
            a.set(i + 1, i, field.one());
            a_star.set(i, i + 1, phi[i].clone());
        }
    }
    Ok(MatrixPair { a, a_star })
}

/// `E_i = ∏_{j≠i} (M - θ_j)/(θ_i - θ_j)` for each `i`.
pub fn primitive_idempotents(m: &Matrix, theta: &[Elem]) -> Result<Vec<Matrix>> {
    let field = m.field();
    let n = m.rows();
    (0..theta.len())
        .map(|i| {
            let mut e = Matrix::identity(field, n);
            for (j, tj) in theta.iter().enumerate() {
                if j != i {
                    let den = (&theta[i] - tj).inv().map_err(|_| {
                        Error::NotLeonard(format!("eigenvalues {i} and {j} coincide"))
                    })?;
                    e = &e * &m.shift(tj).scale(&den);
                }
            }
            Ok(e)
        })
        .collect()
}

fn check_shapes(mp: &MatrixPair, theta: &[Elem], theta_star: &[Elem]) -> Result<usize> {
    let n = mp.a.rows();
    if mp.a.cols() != n
        || mp.a_star.rows() != n
        || mp.a_star.cols() != n
        || theta.len() != n
        || theta_star.len() != n
    {
        return Err(Error::Dimension(format!(
            "matrices must be {n}×{n} with {n} eigenvalues on each side"
        )));
    }
    Ok(n)
}

/// `c` with `w = c v`, if `w` lies on the line through `v`.
fn multiple_of(w: &[Elem], v: &[Elem]) -> Option<Elem> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let c = w[k].checked_div(&v[k]).ok()?;
    w.iter().zip(v).all(|(x, y)| *x == &c * y).then_some(c)
}

fn in_span(field: Field, n: usize, basis: &[Vec<Elem>], v: &[Elem]) -> bool {
    let mut cols = basis.to_vec();
    let r = Matrix::from_columns(field, n, &cols).rank();
    cols.push(v.to_vec());
    Matrix::from_columns(field, n, &cols).rank() == r
}

/// `ζ` by applying `(A*-θ*_1)...(A*-θ*_i)(A-θ_{i-1})...(A-θ_0)` to the line
/// `ker(A* - θ*_0)`.
pub fn word_path_zeta(mp: &MatrixPair, theta: &[Elem], theta_star: &[Elem]) -> Result<Vec<Elem>> {
    let n = check_shapes(mp, theta, theta_star)?;
    let field = mp.a.field();
    let line = mp.a_star.shift(&theta_star[0]).kernel();
    if line.len() != 1 {
        return Err(Error::NotLeonard(format!(
            "the θ*_0 eigenspace has dimension {}",
            line.len()
        )));
    }
    let u0 = &line[0];
    let mut out = vec![field.one()];
    let mut raised = u0.clone();
    for i in 1..n {
        raised = mp.a.shift(&theta[i - 1]).apply(&raised);
        let mut v = raised.clone();
        for k in (1..=i).rev() {
            v = mp.a_star.shift(&theta_star[k]).apply(&v);
        }
        let z = multiple_of(&v, u0).ok_or_else(|| {
            Error::NotSplitConsistent(format!("word {i} leaves the line U_0"))
        })?;
        out.push(z);
    }
    Ok(out)
}

/// The split decomposition `U_i = (E*_0V + ... + E*_iV) ∩ (E_iV + ... + E_dV)`
/// and `ζ` read off by walking the word through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub subspaces: Vec<Vec<Vec<Elem>>>,
    pub zeta: Vec<Elem>,
}

pub fn idempotent_path(mp: &MatrixPair, theta: &[Elem], theta_star: &[Elem]) -> Result<SplitDecomposition> {
    let n = check_shapes(mp, theta, theta_star)?;
    let field = mp.a.field();
    let e = primitive_idempotents(&mp.a, theta)?;
    let es = primitive_idempotents(&mp.a_star, theta_star)?;
    check_idempotent_family(&e)?;
    check_idempotent_family(&es)?;
    let mut subspaces = Vec::with_capacity(n);
    for i in 0..n {
        let lower: Vec<Vec<Elem>> = es[..=i].iter().flat_map(|m| m.column_basis()).collect();
        let upper: Vec<Vec<Elem>> = e[i..].iter().flat_map(|m| m.column_basis()).collect();
        let u = intersect(field, n, &lower, &upper);
        if u.len() != 1 {
            return Err(Error::NotLeonard(format!("dim U_{i} = {}", u.len())));
        }
        subspaces.push(u);
    }
    let all: Vec<Vec<Elem>> = subspaces.iter().flatten().cloned().collect();
    if Matrix::from_columns(field, n, &all).rank() != n {
        return Err(Error::NotLeonard("U_0 + ... + U_d is not direct".into()));
    }
    let u0 = subspaces[0][0].clone();
    let mut zeta = vec![field.one()];
    let mut raised = u0.clone();
    for i in 1..n {
        raised = mp.a.shift(&theta[i - 1]).apply(&raised);
        if !in_span(field, n, &subspaces[i], &raised) {
            return Err(Error::NotSplitConsistent(format!("(A - θ_{}) U_{} ⊄ U_{i}", i - 1, i - 1)));
        }
        let mut v = raised.clone();
        for k in (1..=i).rev() {
            v = mp.a_star.shift(&theta_star[k]).apply(&v);
            if !in_span(field, n, &subspaces[k - 1], &v) {
                return Err(Error::NotSplitConsistent(format!("(A* - θ*_{k}) U_{k} ⊄ U_{}", k - 1)));
            }
        }
        zeta.push(multiple_of(&v, &u0).expect("checked to lie in U_0"));
    }
    Ok(SplitDecomposition { subspaces, zeta })
}

/// `Σ E_i = I` and `E_i E_j = δ_ij E_i`.
fn check_idempotent_family(e: &[Matrix]) -> Result<()> {
    let field = e[0].field();
    let n = e[0].rows();
    let sum = e.iter().skip(1).fold(e[0].clone(), |acc, m| &acc + m);
    if sum != Matrix::identity(field, n) {
        return Err(Error::NotLeonard("the primitive idempotents do not sum to I".into()));
    }
    for (i, ei) in e.iter().enumerate() {
        for (j, ej) in e.iter().enumerate() {
            let prod = ei * ej;
            let ok = if i == j { prod == *ei } else { prod.is_zero() };
            if !ok {
                return Err(Error::NotLeonard(format!("E_{i} E_{j} has the wrong value")));
            }
        }
    }
    Ok(())
}

/// Runs both oracle paths and returns `ζ` when they agree.
pub fn oracle_split_sequence(mp: &MatrixPair, theta: &[Elem], theta_star: &[Elem]) -> Result<Vec<Elem>> {
    let word = word_path_zeta(mp, theta, theta_star)?;
    let split = idempotent_path(mp, theta, theta_star)?;
    if word != split.zeta {
        return Err(Error::NotSplitConsistent(
            "the word path and the idempotent path disagree".into(),
        ));
    }
    Ok(word)
}

/// Outcome of the tridiagonal-relation checks on a matrix pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalReport {
    pub idempotents_ok: bool,
    /// First `(i, j, k)` with `E*_i A^k E*_j ≠ 0` (or the dual) and `k < |i-j|`.
    pub triple_violation: Option<(usize, usize, usize)>,
    /// `dim U_i` from the split intersection.
    pub shape: Vec<usize>,
}

impl TridiagonalReport {
    pub fn holds(&self) -> bool {
        let n = self.shape.len();
        self.idempotents_ok
            && self.triple_violation.is_none()
            && (0..n).all(|i| self.shape[i] == self.shape[n - 1 - i])
    }
}

fn first_triple_violation(e: &[Matrix], m: &Matrix) -> Option<(usize, usize, usize)> {
    let n = e.len();
    let mut power = Matrix::identity(m.field(), m.rows());
    for k in 0..n {
        for i in 0..n {
            let left = &e[i] * &power;
            for j in 0..n {
                if k < i.abs_diff(j) && !(&left * &e[j]).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
        power = &power * m;
    }
    None
}

/// Checks `E*_i A^k E*_j = 0` and `E_i A*^k E_j = 0` for `k < |i-j|`, the
/// idempotent relations, and the symmetry of the shape.
pub fn check_tridiagonal_relations(mp: &MatrixPair, theta: &[Elem], theta_star: &[Elem]) -> Result<TridiagonalReport> {
    let n = check_shapes(mp, theta, theta_star)?;
    let field = mp.a.field();
    let e = primitive_idempotents(&mp.a, theta)?;
    let es = primitive_idempotents(&mp.a_star, theta_star)?;
    let idempotents_ok = check_idempotent_family(&e).is_ok() && check_idempotent_family(&es).is_ok();
    let triple_violation =
        first_triple_violation(&es, &mp.a).or_else(|| first_triple_violation(&e, &mp.a_star));
    let shape = (0..n)
        .map(|i| {
            let lower: Vec<Vec<Elem>> = es[..=i].iter().flat_map(|m| m.column_basis()).collect();
            let upper: Vec<Vec<Elem>> = e[i..].iter().flat_map(|m| m.column_basis()).collect();
            intersect(field, n, &lower, &upper).len()
        })
        .collect();
    Ok(TridiagonalReport {
        idempotents_ok,
        triple_violation,
        shape,
    })
}

/// The subcases of the root theorems, each with its own generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeonardCase {
    /// Type I with `b b* c c* ≠ 0`.
    IGeneric,
    /// Type I with `b b* = 0` and `t ≠ 0`.
    IBZero,
    /// Type I with `c c* = 0` and `t ≠ 0`.
    ICZero,
    /// Type I with `b b* c c* = 0` and `t = 0`.
    ITZero,
    /// Type II with `c c* ≠ 0`.
    IIGeneric,
    /// Type II with `c = 0`.
    IICZero,
    /// Type II with `c* = 0`.
    IIDualCZero,
    /// Type II with `c = c* = 0`.
    IIBothCZero,
    IIIMinus,
    IV,
}

impl LeonardCase {
    pub const ALL: [LeonardCase; 10] = [
        LeonardCase::IGeneric,
        LeonardCase::IBZero,
        LeonardCase::ICZero,
        LeonardCase::ITZero,
        LeonardCase::IIGeneric,
        LeonardCase::IICZero,
        LeonardCase::IIDualCZero,
        LeonardCase::IIBothCZero,
        LeonardCase::IIIMinus,
        LeonardCase::IV,
    ];

    pub fn ty(&self) -> TdType {
        match self {
            LeonardCase::IGeneric | LeonardCase::IBZero | LeonardCase::ICZero | LeonardCase::ITZero => TdType::I,
            LeonardCase::IIGeneric
            | LeonardCase::IICZero
            | LeonardCase::IIDualCZero
            | LeonardCase::IIBothCZero => TdType::II,
            LeonardCase::IIIMinus => TdType::IIIMinus,
            LeonardCase::IV => TdType::IV,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            LeonardCase::IGeneric => "I, bb*cc* != 0",
            LeonardCase::IBZero => "I, bb* = 0, t != 0",
            LeonardCase::ICZero => "I, cc* = 0, t != 0",
            LeonardCase::ITZero => "I, bb*cc* = 0, t = 0",
            LeonardCase::IIGeneric => "II, cc* != 0",
            LeonardCase::IICZero => "II, c = 0",
            LeonardCase::IIDualCZero => "II, c* = 0",
            LeonardCase::IIBothCZero => "II, c = c* = 0",
            LeonardCase::IIIMinus => "III-",
            LeonardCase::IV => "IV",
        }
    }

    /// The field the case is generated over.
    pub fn field(&self) -> Field {
        match self {
            LeonardCase::IV => Field::Gf16,
            _ => Field::Rationals,
        }
    }

    /// Diameters the case admits, up to `max_d`.
    pub fn diameters(&self, max_d: usize) -> Vec<usize> {
        match self {
            LeonardCase::IV => vec![3],
            LeonardCase::IIIMinus => (1..=max_d).step_by(2).collect(),
            _ => (1..=max_d).collect(),
        }
    }
}
