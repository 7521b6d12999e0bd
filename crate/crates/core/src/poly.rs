//! Dense univariate polynomials in `λ` over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Coefficients in ascending degree, with no trailing zeros. The zero
/// polynomial has no coefficients but still remembers its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// The indeterminate `λ`.
    pub fn lambda(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `c0 + c1 λ`.
    pub fn linear(c0: Elem, c1: Elem) -> Poly {
        Poly::new(c0.field(), vec![c0, c1])
    }

    /// `∏ (λ - r)`.
    pub fn from_roots(field: Field, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, r| {
            &acc * &Poly::linear(-r, field.one())
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `λ^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Elem::is_one)
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| &acc * self)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self * other)
    }

    /// `p(u λ + v)`.
    pub fn compose_affine(&self, u: &Elem, v: &Elem) -> Poly {
        let inner = Poly::linear(v.clone(), u.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(self.field), |acc, c| {
                &(&acc * &inner) + &Poly::constant(c.clone())
            })
    }

    /// `Σ p_i num^i den^(d-i)`: the numerator of `p(num/den)` after clearing
    /// `den^d`. Requires `d >= deg p`.
    pub fn substitute_rational(&self, d: usize, num: &Poly, den: &Poly) -> Poly {
        assert!(
            self.degree().is_none_or(|k| k <= d),
            "substitution degree {d} below polynomial degree"
        );
        let mut total = Poly::zero(self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = &num.pow(i as u32) * &den.pow((d - i) as u32);
            total = &total + &term.scale(c);
        }
        total
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomial field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomial field mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect(),
        )
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomial field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `τ_i = (λ - θ_0)(λ - θ_1)...(λ - θ_{i-1})`. Any `i` up to the number of
/// eigenvalues is accepted; `τ_{d+1}` is the minimal polynomial.
pub fn tau(i: usize, theta: &[Elem]) -> Result<Poly> {
    let field = field_of(theta)?;
    check_index(i, theta)?;
    Ok(Poly::from_roots(field, &theta[..i]))
}

/// `η_i = (λ - θ_d)(λ - θ_{d-1})...(λ - θ_{d-i+1})`.
pub fn eta(i: usize, theta: &[Elem]) -> Result<Poly> {
    let field = field_of(theta)?;
    check_index(i, theta)?;
    Ok(Poly::from_roots(field, &theta[theta.len() - i..]))
}

fn check_index(i: usize, theta: &[Elem]) -> Result<()> {
    if i > theta.len() {
        return Err(Error::IndexOutOfRange { index: i, max: theta.len() });
    }
    Ok(())
}

fn field_of(theta: &[Elem]) -> Result<Field> {
    theta
        .first()
        .map(Elem::field)
        .ok_or(Error::IndexOutOfRange { index: 0, max: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Elem {
        Field::Rationals.from_i64(n)
    }

    fn p(cs: &[i64]) -> Poly {
        Poly::new(Field::Rationals, cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn basic_ring_ops() {
        assert!(p(&[-3, 1]).eval(&q(3)).is_zero());
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert!(Poly::zero(Field::Rationals).eval(&q(5)).is_zero());
        assert_eq!(Poly::zero(Field::Rationals).degree(), None);
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn tau_example() {
        let theta = [q(2), q(5)];
        assert_eq!(tau(2, &theta).unwrap(), p(&[10, -7, 1]));
        assert_eq!(tau(2, &theta).unwrap().to_string(), "[10, -7, 1]");
        assert_eq!(tau(0, &theta).unwrap(), Poly::one(Field::Rationals));
        assert!(tau(3, &theta).is_err());
        assert_eq!(eta(1, &theta).unwrap(), p(&[-5, 1]));
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = Poly::one(Field::Rationals);
        let b = Poly::one(Field::Gf4);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn substitution_clears_denominators() {
        // p = 1 + λ at λ = 1/(λ+1), cleared by (λ+1)^1 -> λ + 2
        let num = Poly::one(Field::Rationals);
        let den = p(&[1, 1]);
        assert_eq!(p(&[1, 1]).substitute_rational(1, &num, &den), p(&[2, 1]));
    }

    fn distinct_theta() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::hash_set(-30i64..30, 1..8).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn tau_eta_monic_with_vanishing_pattern(raw in distinct_theta()) {
            let theta: Vec<Elem> = raw.iter().map(|&x| q(x)).collect();
            let d = theta.len() - 1;
            for i in 0..=d {
                let t = tau(i, &theta).unwrap();
                let e = eta(i, &theta).unwrap();
                prop_assert!(t.is_monic() && e.is_monic());
                prop_assert_eq!(t.degree(), Some(i));
                prop_assert_eq!(e.degree(), Some(i));
                for (j, th) in theta.iter().enumerate() {
                    prop_assert_eq!(t.eval(th).is_zero(), j < i);
                    prop_assert_eq!(e.eval(th).is_zero(), j + i > d);
                }
            }
        }

        #[test]
        fn affine_composition(cs in proptest::collection::vec(-20i64..20, 0..7),
                              u in -5i64..5, v in -5i64..5, x in -5i64..5) {
            let poly = p(&cs);
            let lhs = poly.compose_affine(&q(u), &q(v)).eval(&q(x));
            let rhs = poly.eval(&(&(&q(u) * &q(x)) + &q(v)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
