//! The scalars `[r,s,t]` attached to each type, and the `η`-expansion check.

use crate::error::{Error, Result};
use crate::field::{factorial, q_pochhammer, Elem, Field};
use crate::params::{Family, ParameterArray};
use crate::poly::{eta, tau, Poly};

/// `[r,s,t]` for the given family, defined when `r + s + t <= d`.
pub fn bracket(r: usize, s: usize, t: usize, family: &Family, field: Field, d: usize) -> Result<Elem> {
    if r + s + t > d {
        return Err(Error::IndexOutOfRange {
            index: r + s + t,
            max: d,
        });
    }
    let quotient = |num: Elem, den: Elem| -> Result<Elem> {
        // The characteristic and q constraints make this nonzero.
        num.checked_div(&den).map_err(|_| {
            Error::Characteristic(format!("zero denominator in [{r},{s},{t}] over {field}"))
        })
    };
    match family {
        Family::I { q } => {
            let q2 = q.square();
            let poch = |n| q_pochhammer(&q2, &q2, n);
            quotient(
                &(&poch(r + s) * &poch(r + t)) * &poch(s + t),
                &(&(&poch(r) * &poch(s)) * &poch(t)) * &poch(r + s + t),
            )
        }
        Family::II => {
            let f = |n| factorial(field, n);
            quotient(
                &(&f(r + s) * &f(r + t)) * &f(s + t),
                &(&(&f(r) * &f(s)) * &f(t)) * &f(r + s + t),
            )
        }
        Family::III => {
            if r % 2 == 1 && s % 2 == 1 && t % 2 == 1 {
                return Ok(field.zero());
            }
            let f = |n: usize| factorial(field, n / 2);
            quotient(
                &(&f(r + s) * &f(r + t)) * &f(s + t),
                &(&(&f(r) * &f(s)) * &f(t)) * &f(r + s + t),
            )
        }
        Family::IV => {
            if r == 0 || s == 0 || t == 0 {
                Ok(field.one())
            } else if (r, s, t) == (1, 1, 1) {
                Ok(field.zero())
            } else {
                Err(Error::InvalidType(format!(
                    "[{r},{s},{t}] is undefined for type IV"
                )))
            }
        }
    }
}

/// Outcome of an identity check: either it holds, or both sides differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<T> {
    Holds,
    Fails { lhs: T, rhs: T },
}

impl<T> Check<T> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }
}

/// `η_i = Σ_h [h, i-h, d-i] η_{i-h}(θ_0) τ_h`, compared coefficient-wise.
pub fn check_eta_expansion(pa: &ParameterArray, i: usize) -> Result<Check<Poly>> {
    let d = pa.d();
    let theta = pa.theta();
    let field = pa.field();
    let family = pa.family();
    let lhs = eta(i, theta)?;
    let mut rhs = Poly::zero(field);
    for h in 0..=i {
        let coeff = &bracket(h, i - h, d - i, &family, field, d)? * &eta(i - h, theta)?.eval(&theta[0]);
        rhs = &rhs + &tau(h, theta)?.scale(&coeff);
    }
    Ok(if lhs == rhs {
        Check::Holds
    } else {
        Check::Fails { lhs, rhs }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Elem {
        Field::Rationals.from_ratio(n, d).unwrap()
    }

    #[test]
    fn examples() {
        let f = Field::Rationals;
        assert_eq!(bracket(1, 1, 1, &Family::II, f, 3).unwrap(), q(4, 3));
        assert!(bracket(1, 1, 3, &Family::III, f, 5).unwrap().is_zero());
        assert!(bracket(1, 1, 1, &Family::IV, Field::Gf4, 3).unwrap().is_zero());
        assert!(bracket(2, 2, 0, &Family::II, f, 3).is_err());
        let fam = Family::I { q: q(2, 1) };
        for fam in [fam, Family::II, Family::III] {
            assert!(bracket(3, 0, 2, &fam, f, 6).unwrap().is_one());
        }
    }

    #[test]
    fn type_one_small_case() {
        // [1,1,1] = (1-q^4)^2 / ((1-q^2)(1-q^6)) at q = 2
        let fam = Family::I { q: q(2, 1) };
        let x = bracket(1, 1, 1, &fam, Field::Rationals, 3).unwrap();
        let expected = q(-15 * -15, (-3) * (-63));
        assert_eq!(x, expected);
    }
}
