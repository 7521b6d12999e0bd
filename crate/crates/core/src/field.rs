//! Exact scalar fields: the rationals, prime fields `Z/p`, `GF(4)` and
//! `GF(16)`.
//!
//! Every element carries enough information to identify its field (a prime
//! field element stores its modulus), so arithmetic never needs a separate
//! context object. Mixing elements of different fields is a programming error
//! and panics; the parsing layers guarantee a single field per computation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

/// Largest accepted prime modulus. Square roots in prime fields are found by
/// scanning, so the modulus is kept at desk scale.
pub const MAX_MODULUS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} exceeds the supported bound {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown field descriptor `{0}` (expected Q, Fp:<p>, GF4 or GF16)")]
    BadDescriptor(String),
    #[error("cannot parse `{text}` as an element of {field}")]
    BadElement { text: String, field: Field },
    #[error("invalid q: q^2 = 1 so q - q^-1 is not invertible")]
    InvalidQ,
}

/// Descriptor of the ambient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `Z/p` for an odd prime `p`.
    Prime(u64),
    /// The four-element field `{0, 1, w, w+1}` with `w^2 = w + 1`.
    Gf4,
    /// `GF(2)[g] / (g^4 + g + 1)`. Quadratics over `GF(4)` split here.
    Gf16,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    /// Prime field with validation of the modulus.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if p == 2 || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Gf4 | Field::Gf16 => 2,
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map `Z -> F`.
    pub fn from_i64(&self, n: i64) -> Elem {
        match *self {
            Field::Rationals => Elem::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Elem::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
            Field::Gf4 => Elem::Gf4((n.rem_euclid(2)) as u8),
            Field::Gf16 => Elem::Gf16((n.rem_euclid(2)) as u8),
        }
    }

    /// `num / den` in the field; fails when `den` maps to zero.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Elem, FieldError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    fn from_bigint(&self, n: &BigInt) -> Elem {
        match *self {
            Field::Rationals => Elem::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Elem::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
            Field::Gf4 | Field::Gf16 => {
                let r = n.mod_floor(&BigInt::from(2)).to_i64().expect("residue fits");
                self.from_i64(r)
            }
        }
    }

    /// The generator `w` of `GF(4)`.
    pub fn gf4_w() -> Elem {
        Elem::Gf4(0b10)
    }

    /// The generator `g` of `GF(16)`.
    pub fn gf16_g() -> Elem {
        Elem::Gf16(0b10)
    }

    /// Parses an element in the rendering used by [`Elem`]'s `Display`:
    /// `num/den` for rationals (also accepted in prime fields), integers,
    /// `0|1|w|w+1` for `GF(4)`, and sums of `1, g, g^2, g^3` for `GF(16)`.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, FieldError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || FieldError::BadElement {
            text: text.to_string(),
            field: *self,
        };
        match self {
            Field::Gf4 => match s.as_str() {
                "0" => Ok(Elem::Gf4(0)),
                "1" => Ok(Elem::Gf4(1)),
                "w" => Ok(Elem::Gf4(2)),
                "w+1" | "1+w" => Ok(Elem::Gf4(3)),
                _ => Err(bad()),
            },
            Field::Gf16 => {
                if s == "0" {
                    return Ok(Elem::Gf16(0));
                }
                let mut bits = 0u8;
                for term in s.split('+') {
                    let bit = match term {
                        "1" => 0,
                        "g" => 1,
                        "g^2" => 2,
                        "g^3" => 3,
                        _ => return Err(bad()),
                    };
                    bits ^= 1 << bit;
                }
                Ok(Elem::Gf16(bits))
            }
            _ => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s.as_str(), "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                self.from_bigint(&num)
                    .checked_div(&self.from_bigint(&den))
                    .map_err(|_| bad())
            }
        }
    }

    /// All elements, for fields small enough to enumerate.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match *self {
            Field::Rationals => None,
            Field::Prime(p) => Some(
                (0..p)
                    .map(|value| Elem::Prime { value, modulus: p })
                    .collect(),
            ),
            Field::Gf4 => Some((0..4).map(Elem::Gf4).collect()),
            Field::Gf16 => Some((0..16).map(Elem::Gf16).collect()),
        }
    }

    /// A random element. Rationals are drawn with small numerators and
    /// denominators so that exact computations stay cheap.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match *self {
            Field::Rationals => {
                let num: i64 = rng.gen_range(-9..=9);
                let den: i64 = rng.gen_range(1..=4);
                Elem::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            Field::Prime(p) => Elem::Prime {
                value: rng.gen_range(0..p),
                modulus: p,
            },
            Field::Gf4 => Elem::Gf4(rng.gen_range(0..4)),
            Field::Gf16 => Elem::Gf16(rng.gen_range(0..16)),
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
            Field::Gf4 => write!(f, "GF4"),
            Field::Gf16 => write!(f, "GF16"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "Q" => Ok(Field::Rationals),
            "GF4" => Ok(Field::Gf4),
            "GF16" => Ok(Field::Gf16),
            _ => {
                let p = s
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| FieldError::BadDescriptor(s.to_string()))?;
                Field::prime(p)
            }
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    /// Always in lowest terms with positive denominator (maintained by
    /// `BigRational`).
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
    /// Bit 0 is the constant coefficient, bit 1 the coefficient of `w`.
    Gf4(u8),
    /// Bit `k` is the coefficient of `g^k`.
    Gf16(u8),
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    let (a0, a1) = (a & 1, (a >> 1) & 1);
    let (b0, b1) = (b & 1, (b >> 1) & 1);
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | (c1 << 1)
}

fn gf16_mul(mut a: u8, mut b: u8) -> u8 {
    let mut r = 0u8;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0b1_0011;
        }
    }
    r
}

fn mismatch(a: &Elem, b: &Elem) -> ! {
    panic!(
        "field mismatch: {} ({}) combined with {} ({})",
        a,
        a.field(),
        b,
        b.field()
    )
}

impl Elem {
    pub fn field(&self) -> Field {
        match self {
            Elem::Rational(_) => Field::Rationals,
            Elem::Prime { modulus, .. } => Field::Prime(*modulus),
            Elem::Gf4(_) => Field::Gf4,
            Elem::Gf16(_) => Field::Gf16,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Rational(r) => r.is_zero(),
            Elem::Prime { value, .. } => *value == 0,
            Elem::Gf4(v) | Elem::Gf16(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Rational(r) => r.is_one(),
            Elem::Prime { value, .. } => *value == 1,
            Elem::Gf4(v) | Elem::Gf16(v) => *v == 1,
        }
    }

    pub fn zero_like(&self) -> Elem {
        self.field().zero()
    }

    pub fn one_like(&self) -> Elem {
        self.field().one()
    }

    pub fn inv(&self) -> Result<Elem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Elem::Rational(r) => Elem::Rational(r.recip()),
            Elem::Prime { value, modulus } => {
                // Fermat: x^(p-2)
                let mut result = 1u64;
                let mut base = *value;
                let mut e = modulus - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        result = result * base % modulus;
                    }
                    base = base * base % modulus;
                    e >>= 1;
                }
                Elem::Prime {
                    value: result,
                    modulus: *modulus,
                }
            }
            // 1 -> 1, w -> w+1, w+1 -> w
            Elem::Gf4(v) => Elem::Gf4(match v {
                1 => 1,
                2 => 3,
                _ => 2,
            }),
            Elem::Gf16(v) => Elem::Gf16((1..16).find(|&y| gf16_mul(*v, y) == 1).expect("nonzero")),
        })
    }

    pub fn checked_div(&self, other: &Elem) -> Result<Elem, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn square(&self) -> Elem {
        self * self
    }

    pub fn pow(&self, mut e: u32) -> Elem {
        let mut result = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = base.square();
            e >>= 1;
        }
        result
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn powi(&self, e: i64) -> Result<Elem, FieldError> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// The rational value, if this is a rational element.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Elem::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Elem::Prime { value, .. } => write!(f, "{value}"),
            Elem::Gf4(v) => write!(
                f,
                "{}",
                match v {
                    0 => "0",
                    1 => "1",
                    2 => "w",
                    _ => "w+1",
                }
            ),
            Elem::Gf16(0) => write!(f, "0"),
            Elem::Gf16(v) => {
                let terms: Vec<&str> = [(3, "g^3"), (2, "g^2"), (1, "g"), (0, "1")]
                    .into_iter()
                    .filter(|(k, _)| v >> k & 1 == 1)
                    .map(|(_, t)| t)
                    .collect();
                write!(f, "{}", terms.join("+"))
            }
        }
    }
}

impl<'a> Add<&'a Elem> for &'a Elem {
    type Output = Elem;

    fn add(self, rhs: &'a Elem) -> Elem {
        match (self, rhs) {
            (Elem::Rational(a), Elem::Rational(b)) => Elem::Rational(a + b),
            (Elem::Prime { value: a, modulus: p }, Elem::Prime { value: b, modulus: q })
                if p == q =>
            {
                Elem::Prime {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            (Elem::Gf4(a), Elem::Gf4(b)) => Elem::Gf4(a ^ b),
            (Elem::Gf16(a), Elem::Gf16(b)) => Elem::Gf16(a ^ b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Elem> for &'a Elem {
    type Output = Elem;

    fn sub(self, rhs: &'a Elem) -> Elem {
        match (self, rhs) {
            (Elem::Rational(a), Elem::Rational(b)) => Elem::Rational(a - b),
            (Elem::Prime { value: a, modulus: p }, Elem::Prime { value: b, modulus: q })
                if p == q =>
            {
                Elem::Prime {
                    value: (a + p - b) % p,
                    modulus: *p,
                }
            }
            (Elem::Gf4(a), Elem::Gf4(b)) => Elem::Gf4(a ^ b),
            (Elem::Gf16(a), Elem::Gf16(b)) => Elem::Gf16(a ^ b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Elem> for &'a Elem {
    type Output = Elem;

    fn mul(self, rhs: &'a Elem) -> Elem {
        match (self, rhs) {
            (Elem::Rational(a), Elem::Rational(b)) => Elem::Rational(a * b),
            (Elem::Prime { value: a, modulus: p }, Elem::Prime { value: b, modulus: q })
                if p == q =>
            {
                Elem::Prime {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            (Elem::Gf4(a), Elem::Gf4(b)) => Elem::Gf4(gf4_mul(*a, *b)),
            (Elem::Gf16(a), Elem::Gf16(b)) => Elem::Gf16(gf16_mul(*a, *b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        match self {
            Elem::Rational(a) => Elem::Rational(-a),
            Elem::Prime { value, modulus } => Elem::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Elem::Gf4(a) => Elem::Gf4(*a),
            Elem::Gf16(a) => Elem::Gf16(*a),
        }
    }
}

impl Neg for Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &'a Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Elem> for &'a Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Elem> for Elem {
    fn add_assign(&mut self, rhs: &Elem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Elem> for Elem {
    fn sub_assign(&mut self, rhs: &Elem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Elem> for Elem {
    fn mul_assign(&mut self, rhs: &Elem) {
        *self = &*self * rhs;
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Some `y` with `y^2 = x`, if the field contains one.
pub fn sqrt_in_field(x: &Elem) -> Option<Elem> {
    match x {
        Elem::Rational(r) => {
            let num = exact_isqrt(r.numer())?;
            let den = exact_isqrt(r.denom())?;
            Some(Elem::Rational(BigRational::new(num, den)))
        }
        Elem::Prime { value, modulus } => (0..=modulus / 2)
            .find(|y| y * y % modulus == *value)
            .map(|y| Elem::Prime {
                value: y,
                modulus: *modulus,
            }),
        Elem::Gf4(_) | Elem::Gf16(_) => x
            .field()
            .elements()
            .expect("finite")
            .into_iter()
            .find(|y| y.square() == *x),
    }
}

/// `(a; q)_n = (1 - a)(1 - aq)...(1 - aq^(n-1))`, with `(a; q)_0 = 1`.
pub fn q_pochhammer(a: &Elem, q: &Elem, n: usize) -> Elem {
    let one = a.one_like();
    let mut acc = one.clone();
    let mut term = a.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &term);
        term = &term * q;
    }
    acc
}

/// Rising factorial `a (a + 1) ... (a + n - 1)`.
pub fn rising_factorial(a: &Elem, n: usize) -> Elem {
    let field = a.field();
    (0..n).fold(field.one(), |acc, k| &acc * &(a + &field.from_i64(k as i64)))
}

/// `n!` mapped into the field.
pub fn factorial(field: Field, n: usize) -> Elem {
    (1..=n).fold(field.one(), |acc, k| &acc * &field.from_i64(k as i64))
}

/// The symmetric q-integer `(q^n - q^-n) / (q - q^-1)`.
pub fn q_bracket(n: usize, q: &Elem) -> Result<Elem, FieldError> {
    let qinv = q.inv().map_err(|_| FieldError::InvalidQ)?;
    let denom = q - &qinv;
    if denom.is_zero() {
        return Err(FieldError::InvalidQ);
    }
    let num = &q.pow(n as u32) - &qinv.pow(n as u32);
    num.checked_div(&denom)
}

/// `[n]_q [n-1]_q ... [1]_q`, with `[0]!_q = 1`.
pub fn q_factorial(n: usize, q: &Elem) -> Result<Elem, FieldError> {
    let mut acc = q.one_like();
    // validates q even when n = 0
    q_bracket(0, q)?;
    for k in 1..=n {
        acc = &acc * &q_bracket(k, q)?;
    }
    Ok(acc)
}
