//! The Drinfel'd polynomial `P`, its normalized form `P̂`, and the identities
//! relating them.

use crate::brackets::Check;
use crate::error::{Error, Result};
use crate::field::{factorial, q_factorial, Elem, Field};
use crate::params::{parse_word, Family, ParameterArray, TdType, TypeData, RELATIVE_WORDS};
use crate::poly::Poly;

/// Everything computed for one array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldResult {
    pub p: Poly,
    pub p_hat: Poly,
    pub u: Elem,
    pub v: Elem,
    pub p_list: Vec<Poly>,
    pub p_hat_list: Vec<Poly>,
    /// `None` for type III+, where `α` is undefined.
    pub alpha_list: Option<Vec<Elem>>,
}

fn ensure_index(i: usize, d: usize) -> Result<()> {
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    Ok(())
}

fn int(field: Field, n: usize) -> Elem {
    field.from_i64(n as i64)
}

/// `θ_0 θ*_0 + θ_d θ*_d`.
pub fn first_special(pa: &ParameterArray) -> Elem {
    let (t, s, d) = (pa.theta(), pa.theta_star(), pa.d());
    &(&t[0] * &s[0]) + &(&t[d] * &s[d])
}

/// `θ_0 θ*_d + θ_d θ*_0`.
pub fn second_special(pa: &ParameterArray) -> Elem {
    let (t, s, d) = (pa.theta(), pa.theta_star(), pa.d());
    &(&t[0] * &s[d]) + &(&t[d] * &s[0])
}

/// `α_i` for `1 <= i <= d`.
pub fn alpha(i: usize, pa: &ParameterArray) -> Result<Elem> {
    let d = pa.d();
    ensure_index(i, d)?;
    let field = pa.field();
    match pa.td_type() {
        TdType::I => {
            let q = pa.q().expect("validated arrays of type I with d >= 1 carry q");
            let diff = |n: usize| -> Result<Elem> {
                Ok(&q.pow(n as u32) - &q.powi(-(n as i64))?)
            };
            Ok(diff(i)?.square().checked_div(&diff(d)?.square())?)
        }
        TdType::II => Ok(int(field, i * i).checked_div(&int(field, d * d))?),
        TdType::IIIMinus | TdType::IV => Ok(field.from_i64((i % 2) as i64)),
        TdType::IIIPlus => Err(Error::AlphaUndefined),
    }
}

/// `p_i`, including the type III+ variant.
pub fn p_poly(i: usize, pa: &ParameterArray) -> Result<Poly> {
    let d = pa.d();
    ensure_index(i, d)?;
    let field = pa.field();
    let (t, s) = (pa.theta(), pa.theta_star());
    let second = Poly::linear(second_special(pa), -field.one());
    let diff = &(&t[0] - &t[i]) * &(&s[0] - &s[i]);
    if pa.td_type() == TdType::IIIPlus {
        if i % 2 == 1 {
            return Ok(second);
        }
        let ratio = int(field, i * i).checked_div(&int(field, d * d))?;
        return Ok(&second.scale(&ratio) + &Poly::constant(diff));
    }
    Ok(&second.scale(&alpha(i, pa)?) + &Poly::constant(diff))
}

/// `Σ ζ_i f_{i+1} ... f_d`, evaluated Horner-style.
fn zeta_sum(field: Field, zeta: &[Elem], factors: &[Poly]) -> Poly {
    let mut acc = Poly::constant(zeta[0].clone());
    for (f, z) in factors.iter().zip(&zeta[1..]) {
        acc = &(&acc * f) + &Poly::constant(z.clone());
    }
    debug_assert_eq!(acc.field(), field);
    acc
}

pub fn drinfeld_poly(pa: &ParameterArray) -> Result<Poly> {
    let ps = (1..=pa.d()).map(|i| p_poly(i, pa)).collect::<Result<Vec<_>>>()?;
    Ok(if pa.td_type() == TdType::IIIPlus {
        ps.iter().fold(Poly::one(pa.field()), |acc, p| &acc * p)
    } else {
        zeta_sum(pa.field(), pa.zeta(), &ps)
    })
}

/// `p̂_i` from the fitted type data. For type III+ this is `p_i`.
pub fn normalized_p(i: usize, pa: &ParameterArray, td: &TypeData) -> Result<Poly> {
    let d = pa.d();
    ensure_index(i, d)?;
    let field = pa.field();
    let (e, s) = (&td.eig, &td.dual);
    let bb = &e.b * &s.b;
    let cc = &e.c * &s.c;
    let cross = &(&e.b * &s.c) + &(&e.c * &s.b);
    let minus_lambda = |c0: Elem| Poly::linear(c0, -field.one());
    match (&td.family, pa.td_type()) {
        (_, TdType::IIIPlus) => p_poly(i, pa),
        (Family::I { q }, _) => {
            let k = (&q.pow(i as u32) - &q.powi(-(i as i64))?).square();
            let twist = 2 * i as i64 - 2 * d as i64;
            let c0 = &(&bb * &q.powi(twist)?) + &(&cc * &q.powi(-twist)?);
            Ok(minus_lambda(c0).scale(&k))
        }
        (Family::II, _) => {
            let m = int(field, d - i);
            let c0 = &(&(&bb * &field.from_ratio(1, 2)?) + &(&cross * &m)) + &(&cc * &m.square());
            Ok(minus_lambda(c0).scale(&int(field, i * i)))
        }
        (Family::III, _) => {
            if i % 2 == 0 {
                return Ok(Poly::constant(&cc * &int(field, i * i)));
            }
            let m = &int(field, i) - &int(field, d);
            let two = field.from_i64(2);
            let c0 = &(&(&two * &bb) + &(&(&two * &cross) * &m)) + &(&cc * &m.square());
            Ok(minus_lambda(c0))
        }
        (Family::IV, _) => {
            let ab = &(&e.a * &s.b) + &(&e.b * &s.a);
            let lam = Poly::lambda(field);
            match i {
                1 => {
                    let abc = &(&e.a + &e.b) + &e.c;
                    let abc_s = &(&s.a + &s.b) + &s.c;
                    Ok(&lam + &Poly::constant(&ab + &(&abc * &abc_s)))
                }
                2 => Ok(Poly::constant(cc)),
                _ => {
                    let sum = &(&e.a + &e.b) * &(&s.a + &s.b);
                    Ok(&lam + &Poly::constant(&ab + &sum))
                }
            }
        }
    }
}

pub fn normalized_drinfeld(pa: &ParameterArray, td: &TypeData) -> Result<Poly> {
    if pa.td_type() == TdType::IIIPlus {
        return drinfeld_poly(pa);
    }
    let ps = (1..=pa.d())
        .map(|i| normalized_p(i, pa, td))
        .collect::<Result<Vec<_>>>()?;
    Ok(zeta_sum(pa.field(), pa.zeta(), &ps))
}

/// The two points where `P̂` takes the values `ζ_d` and `ζ^⇓_d`, or `None`
/// for types where `P̂ = P` (III+ and IV use the unnormalized points).
pub fn normalized_anchors(pa: &ParameterArray, td: &TypeData) -> Result<Option<(Elem, Elem)>> {
    let field = pa.field();
    let (e, s) = (&td.eig, &td.dual);
    let bb = &e.b * &s.b;
    Ok(match (&td.family, pa.td_type()) {
        (_, TdType::IIIPlus) | (Family::IV, _) => None,
        (Family::I { .. }, _) => Some((
            &bb + &(&e.c * &s.c),
            &(&e.b * &s.c) + &(&e.c * &s.b),
        )),
        (Family::II, _) => {
            let half = &bb * &field.from_ratio(1, 2)?;
            Some((half.clone(), -half))
        }
        (Family::III, _) => {
            let two = &bb * &field.from_i64(2);
            Some((two.clone(), -two))
        }
    })
}

/// `(u, v)` with `P̂(λ) = P(uλ + v)`, verified against both anchor equations.
pub fn affine_uv(pa: &ParameterArray, td: &TypeData) -> Result<(Elem, Elem)> {
    let field = pa.field();
    let d = pa.d();
    let (e, s) = (&td.eig, &td.dual);
    let two = field.from_i64(2);
    let (u, v) = match (&td.family, pa.td_type()) {
        (_, TdType::IIIPlus) | (Family::IV, _) => return Ok((field.one(), field.zero())),
        (Family::I { q }, _) => {
            let qd = q.pow(d as u32);
            let qdi = q.powi(-(d as i64))?;
            let u = (&qd - &qdi).square();
            let bc = &e.b + &e.c;
            let bc_s = &s.b + &s.c;
            let v = &(&(&two * &(&e.a * &s.a)) + &(&two * &(&bc * &bc_s)))
                + &(&(&qd + &qdi) * &(&(&e.a * &bc_s) + &(&s.a * &bc)));
            (u, v)
        }
        (Family::II, _) => (int(field, d * d), &two * &(&e.a * &s.a)),
        (Family::III, _) => {
            let dd = int(field, d);
            let l = &(&two * &e.a) - &(&e.c * &dd);
            let r = &(&two * &s.a) - &(&s.c * &dd);
            (field.one(), (&l * &r).checked_div(&two)?)
        }
    };
    let (x1, x2) = normalized_anchors(pa, td)?.expect("anchored family");
    for (x, target, name) in [(x1, first_special(pa), "first"), (x2, second_special(pa), "second")] {
        let got = &(&u * &x) + &v;
        if got != target {
            return Err(Error::AnchorMismatch(format!(
                "{name} anchor gives {got}, expected {target}"
            )));
        }
    }
    Ok((u, v))
}

/// `P`, `P̂` and their ingredients. Fits the type data internally.
pub fn drinfeld(pa: &ParameterArray) -> Result<DrinfeldResult> {
    let d = pa.d();
    let field = pa.field();
    let p_list = (1..=d).map(|i| p_poly(i, pa)).collect::<Result<Vec<_>>>()?;
    let p = drinfeld_poly(pa)?;
    let alpha_list = if pa.td_type() == TdType::IIIPlus {
        None
    } else {
        Some((1..=d).map(|i| alpha(i, pa)).collect::<Result<Vec<_>>>()?)
    };
    if d == 0 {
        // P = P̂ = 1; the type I and II formulas give u = 0, v = 2 θ_0 θ*_0.
        let (u, v) = match pa.td_type() {
            TdType::I | TdType::II => (field.zero(), first_special(pa)),
            _ => (field.one(), field.zero()),
        };
        return Ok(DrinfeldResult {
            p: p.clone(),
            p_hat: p,
            u,
            v,
            p_list,
            p_hat_list: Vec::new(),
            alpha_list,
        });
    }
    let td = pa.fit_type_data()?;
    drinfeld_with(pa, &td, p, p_list, alpha_list)
}

/// As [`drinfeld`], with the type data supplied.
pub fn drinfeld_with_type_data(pa: &ParameterArray, td: &TypeData) -> Result<DrinfeldResult> {
    let d = pa.d();
    let p_list = (1..=d).map(|i| p_poly(i, pa)).collect::<Result<Vec<_>>>()?;
    let p = drinfeld_poly(pa)?;
    let alpha_list = if pa.td_type() == TdType::IIIPlus {
        None
    } else {
        Some((1..=d).map(|i| alpha(i, pa)).collect::<Result<Vec<_>>>()?)
    };
    drinfeld_with(pa, td, p, p_list, alpha_list)
}

fn drinfeld_with(
    pa: &ParameterArray,
    td: &TypeData,
    p: Poly,
    p_list: Vec<Poly>,
    alpha_list: Option<Vec<Elem>>,
) -> Result<DrinfeldResult> {
    let p_hat_list = (1..=pa.d())
        .map(|i| normalized_p(i, pa, td))
        .collect::<Result<Vec<_>>>()?;
    let p_hat = normalized_drinfeld(pa, td)?;
    let (u, v) = affine_uv(pa, td)?;
    Ok(DrinfeldResult {
        p,
        p_hat,
        u,
        v,
        p_list,
        p_hat_list,
        alpha_list,
    })
}

/// First relative whose polynomial differs from the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D4Mismatch {
    pub relative: &'static str,
    pub quantity: &'static str,
    pub expected: Poly,
    pub actual: Poly,
}

/// Compares `P` and `P̂` across all eight relatives. `Ok(None)` means all
/// agree. For `d >= 2` the relatives' type data is refitted from their
/// eigenvalues; below that the fit is not unique and the symbolic transform
/// of the original type data is used.
pub fn check_d4_invariance(pa: &ParameterArray) -> Result<Option<D4Mismatch>> {
    let base = drinfeld(pa)?;
    let td = if pa.d() >= 1 { Some(pa.fit_type_data()?) } else { None };
    for word in RELATIVE_WORDS {
        let gens = parse_word(word)?;
        let rel = pa.d4_apply(&gens)?;
        let result = match (&td, rel.d()) {
            (Some(_), d) if d >= 2 => drinfeld(&rel)?,
            (Some(td), _) => drinfeld_with_type_data(&rel, &td.d4_apply(&gens, rel.d()))?,
            (None, _) => drinfeld(&rel)?,
        };
        for (name, expected, actual) in [("P", &base.p, &result.p), ("P_hat", &base.p_hat, &result.p_hat)] {
            if expected != actual {
                return Ok(Some(D4Mismatch {
                    relative: word,
                    quantity: name,
                    expected: expected.clone(),
                    actual: actual.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Values of `P` at the two special points, with the values the theory
/// predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specials {
    pub at_first: Elem,
    pub at_second: Elem,
    pub expected_first: Elem,
    pub expected_second: Elem,
}

impl Specials {
    pub fn holds(&self) -> bool {
        self.at_first == self.expected_first && self.at_second == self.expected_second
    }
}

/// `P(θ_0θ*_0 + θ_dθ*_d)` and `P(θ_0θ*_d + θ_dθ*_0)`, expected to be `ζ_d`
/// and `ζ^⇓_d` (both zero for type III+ with `d >= 2`).
pub fn evaluate_specials(pa: &ParameterArray) -> Result<Specials> {
    let d = pa.d();
    let field = pa.field();
    if d == 0 {
        let one = field.one();
        return Ok(Specials {
            at_first: one.clone(),
            at_second: one.clone(),
            expected_first: one.clone(),
            expected_second: one,
        });
    }
    let p = drinfeld_poly(pa)?;
    let (expected_first, expected_second) = if pa.td_type() == TdType::IIIPlus {
        (field.zero(), field.zero())
    } else {
        (pa.zeta()[d].clone(), pa.zeta_ddown()?[d].clone())
    };
    Ok(Specials {
        at_first: p.eval(&first_special(pa)),
        at_second: p.eval(&second_special(pa)),
        expected_first,
        expected_second,
    })
}

/// `D^{-d} (D!)^2 (θ_0θ*_0 + θ_dθ*_d - λ)^D (θ_0θ*_d + θ_dθ*_0 - λ)^D` with
/// `D = d/2`, the closed form of `P` for type III+.
pub fn type_three_plus_closed_form(pa: &ParameterArray) -> Result<Poly> {
    let d = pa.d();
    if pa.td_type() != TdType::IIIPlus {
        return Err(Error::InvalidType(format!("expected III+, got {}", pa.td_type())));
    }
    let field = pa.field();
    let half = d / 2;
    if half == 0 {
        return Ok(Poly::one(field));
    }
    let scalar = factorial(field, half)
        .square()
        .checked_div(&int(field, half).pow(d as u32))?;
    let f1 = Poly::linear(first_special(pa), -field.one()).pow(half as u32);
    let f2 = Poly::linear(second_special(pa), -field.one()).pow(half as u32);
    Ok((&f1 * &f2).scale(&scalar))
}

fn zeta_field(zeta: &[Elem]) -> Result<Field> {
    let field = zeta
        .first()
        .map(Elem::field)
        .ok_or_else(|| Error::InvalidArray("ζ must have at least one entry".into()))?;
    if !zeta[0].is_one() {
        return Err(Error::InvalidArray(format!("ζ_0 must be 1, got {}", zeta[0])));
    }
    Ok(field)
}

/// `Σ (-1)^i ζ_i λ^i / ((i!)^2 4^i)`.
pub fn krawtchouk_drinfeld(zeta: &[Elem]) -> Result<Poly> {
    let field = zeta_field(zeta)?;
    let coeffs = zeta
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let den = &factorial(field, i).square() * &field.from_i64(4).pow(i as u32);
            let sign = field.from_i64(if i % 2 == 0 { 1 } else { -1 });
            Ok((&sign * z).checked_div(&den)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

/// The array with eigenvalues `d - 2i`, dual eigenvalues `2i - d`.
pub fn krawtchouk_array(zeta: &[Elem]) -> Result<ParameterArray> {
    let field = zeta_field(zeta)?;
    let d = zeta.len() - 1;
    let theta = (0..=d).map(|i| field.from_i64(d as i64 - 2 * i as i64)).collect();
    let theta_star = (0..=d).map(|i| field.from_i64(2 * i as i64 - d as i64)).collect();
    ParameterArray::new(field, theta, theta_star, zeta.to_vec(), Some(field.from_i64(2)), None)
}

/// `P̂(λ) = (-1)^d (d!)^2 (λ+2)^d P_{A,A*}(4 / (λ+2))`, with the right side
/// cleared of denominators.
pub fn check_krawtchouk_relation(zeta: &[Elem]) -> Result<Check<Poly>> {
    let pa = krawtchouk_array(zeta)?;
    let field = pa.field();
    let d = pa.d();
    let lhs = drinfeld(&pa)?.p_hat;
    let sign = field.from_i64(if d % 2 == 0 { 1 } else { -1 });
    let scalar = &sign * &factorial(field, d).square();
    let num = Poly::constant(field.from_i64(4));
    let den = Poly::linear(field.from_i64(2), field.one());
    let rhs = krawtchouk_drinfeld(zeta)?
        .substitute_rational(d, &num, &den)
        .scale(&scalar);
    Ok(if lhs == rhs { Check::Holds } else { Check::Fails { lhs, rhs } })
}

/// `Σ (-1)^i ζ_i q^i λ^i / ([i]!_q)^2`.
pub fn qgeometric_drinfeld(zeta: &[Elem], q: &Elem) -> Result<Poly> {
    let field = zeta_field(zeta)?;
    let coeffs = zeta
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let sign = field.from_i64(if i % 2 == 0 { 1 } else { -1 });
            let num = &(&sign * z) * &q.pow(i as u32);
            Ok(num.checked_div(&q_factorial(i, q)?.square())?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

/// The array with eigenvalues `q^{2i-d}`, dual eigenvalues `q^{d-2i}`.
pub fn qgeometric_array(zeta: &[Elem], q: &Elem) -> Result<ParameterArray> {
    let field = zeta_field(zeta)?;
    let d = zeta.len() - 1;
    let theta = (0..=d)
        .map(|i| q.powi(2 * i as i64 - d as i64))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let theta_star = (0..=d)
        .map(|i| q.powi(d as i64 - 2 * i as i64))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let beta = Family::I { q: q.clone() }.beta(field)?;
    ParameterArray::new(field, theta, theta_star, zeta.to_vec(), Some(beta), Some(q.clone()))
}

/// `P̂(λ) = (-1)^d ([d]!_q)^2 (q - q^-1)^{2d} λ^d P_{A,A*}(λ^-1 q^-1 (q - q^-1)^-2)`,
/// with the right side cleared of denominators.
pub fn check_qgeometric_relation(zeta: &[Elem], q: &Elem) -> Result<Check<Poly>> {
    let pa = qgeometric_array(zeta, q)?;
    let field = pa.field();
    let d = pa.d();
    let lhs = drinfeld(&pa)?.p_hat;
    let gap = q - &q.inv()?;
    let sign = field.from_i64(if d % 2 == 0 { 1 } else { -1 });
    let scalar = &(&sign * &q_factorial(d, q)?.square()) * &gap.pow(2 * d as u32);
    let c = q.inv()?.checked_div(&gap.square())?;
    let rhs = qgeometric_drinfeld(zeta, q)?
        .substitute_rational(d, &Poly::constant(c), &Poly::lambda(field))
        .scale(&scalar);
    Ok(if lhs == rhs { Check::Holds } else { Check::Fails { lhs, rhs } })
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

    fn d1_example() -> ParameterArray {
        ParameterArray::new(Field::Rationals, ints(&[1, -1]), ints(&[1, -1]), ints(&[1, 2]), Some(q(2, 1)), None)
            .unwrap()
    }

    #[test]
    fn d0_is_one() {
        let pa = ParameterArray::new(Field::Rationals, ints(&[3]), ints(&[5]), ints(&[1]), Some(q(2, 1)), None).unwrap();
        let r = drinfeld(&pa).unwrap();
        assert_eq!(r.p, Poly::one(Field::Rationals));
        assert_eq!(r.p_hat, Poly::one(Field::Rationals));
        assert!(evaluate_specials(&pa).unwrap().holds());
        assert_eq!(check_d4_invariance(&pa).unwrap(), None);
    }

    #[test]
    fn d1_example_polynomial() {
        let pa = d1_example();
        let p = drinfeld_poly(&pa).unwrap();
        assert_eq!(p.to_string(), "[4, -1]");
        let s = evaluate_specials(&pa).unwrap();
        assert_eq!(s.at_first, q(2, 1));
        assert!(s.holds());
        assert_eq!(check_d4_invariance(&pa).unwrap(), None);
    }

    #[test]
    fn type_three_plus_d2() {
        // θ = (1, -2, 3): β = -2 given, d = 2
        let pa = ParameterArray::new(
            Field::Rationals,
            ints(&[1, -2, 3]),
            ints(&[0, 4, -1]),
            ints(&[1, 7, 9]),
            Some(q(-2, 1)),
            None,
        )
        .unwrap();
        assert_eq!(pa.td_type(), TdType::IIIPlus);
        let expected = &Poly::linear(first_special(&pa), q(-1, 1)) * &Poly::linear(second_special(&pa), q(-1, 1));
        assert_eq!(drinfeld_poly(&pa).unwrap(), expected);
        assert_eq!(type_three_plus_closed_form(&pa).unwrap(), expected);
        let s = evaluate_specials(&pa).unwrap();
        assert!(s.at_first.is_zero() && s.at_second.is_zero());
        assert!(matches!(alpha(1, &pa), Err(Error::AlphaUndefined)));
    }

    #[test]
    fn alpha_endpoints_and_beta_form() {
        // d = 3, q = 2: α_2 = (β+2)(β+1)^-2 with β = q^2 + q^-2
        let qq = q(2, 1);
        let theta: Vec<Elem> = (0..=3).map(|i| qq.powi(2 * i - 3).unwrap()).collect();
        let pa = ParameterArray::new(Field::Rationals, theta.clone(), theta, ints(&[1, 0, 0, 0]), None, Some(qq)).unwrap();
        let beta = pa.beta().clone();
        let one = q(1, 1);
        let expected = (&beta + &q(2, 1)).checked_div(&(&beta + &one).square()).unwrap();
        assert_eq!(alpha(2, &pa).unwrap(), expected);
        assert_eq!(alpha(1, &pa).unwrap(), (&beta + &one).square().inv().unwrap());
        assert!(alpha(3, &pa).unwrap().is_one());
    }

    #[test]
    fn krawtchouk_d1_by_hand() {
        let zeta = vec![q(1, 1), q(5, 1)];
        assert_eq!(krawtchouk_drinfeld(&zeta).unwrap(), Poly::new(Field::Rationals, vec![q(1, 1), q(-5, 4)]));
        let pa = krawtchouk_array(&zeta).unwrap();
        // P̂ = -(λ + 2) + ζ_1
        assert_eq!(drinfeld(&pa).unwrap().p_hat, Poly::new(Field::Rationals, ints(&[3, -1])));
        assert!(check_krawtchouk_relation(&zeta).unwrap().holds());
    }

    #[test]
    fn krawtchouk_type_data() {
        let zeta = ints(&[1, 2, 3, 4]);
        let td = krawtchouk_array(&zeta).unwrap().fit_type_data().unwrap();
        assert_eq!(td.eig, crate::Abc::new(q(0, 1), q(-2, 1), q(0, 1)));
        assert_eq!(td.dual, crate::Abc::new(q(0, 1), q(2, 1), q(0, 1)));
    }

    #[test]
    fn qgeometric_d1_by_hand() {
        let qq = q(3, 1);
        let zeta = vec![q(1, 1), q(2, 1)];
        assert_eq!(qgeometric_drinfeld(&zeta, &qq).unwrap(), Poly::new(Field::Rationals, ints(&[1, -6])));
        let pa = qgeometric_array(&zeta, &qq).unwrap();
        let r = drinfeld(&pa).unwrap();
        // p̂_1 = -(q - q^-1)^2 λ
        let gap = (&qq - &qq.inv().unwrap()).square();
        assert_eq!(r.p_hat_list[0], Poly::linear(q(0, 1), -gap));
        assert!(check_qgeometric_relation(&zeta, &qq).unwrap().holds());
    }
}
