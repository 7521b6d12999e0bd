//! Seeded generators for random admissible data. All randomness in the crate
//! and its tests flows through a `ChaCha8Rng` so that runs are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::leonard::{phi_from_params, LeonardCase, LeonardData};
use crate::params::{generate_parameter_array, Abc, Family, ParameterArray, TdType, TypeData};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `q` outside `{0, ±1}` with small numerator and denominator.
pub fn random_q<R: Rng + ?Sized>(rng: &mut R) -> Elem {
    const CHOICES: [(i64, i64); 10] = [
        (2, 1),
        (3, 1),
        (-2, 1),
        (1, 2),
        (-1, 3),
        (3, 2),
        (-3, 2),
        (2, 3),
        (5, 2),
        (-4, 3),
    ];
    let (n, d) = *CHOICES.choose(rng).expect("nonempty");
    Field::Rationals.from_ratio(n, d).expect("nonzero denominator")
}

/// `ζ` with `ζ_0 = 1` and the rest uniform.
pub fn random_zeta<R: Rng + ?Sized>(field: Field, d: usize, rng: &mut R) -> Vec<Elem> {
    std::iter::once(field.one())
        .chain((0..d).map(|_| field.random(rng)))
        .collect()
}

fn random_abc<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Abc {
    Abc::new(field.random(rng), field.random(rng), field.random(rng))
}

/// Random type data for `family` that passes validation and yields distinct
/// eigenvalues at diameter `d`.
pub fn random_type_data<R: Rng + ?Sized>(family: &Family, field: Field, d: usize, rng: &mut R) -> TypeData {
    loop {
        let td = TypeData {
            family: family.clone(),
            eig: random_abc(field, rng),
            dual: random_abc(field, rng),
        };
        if td.validate(d).is_err() {
            continue;
        }
        let distinct = |dual| {
            td.sequence(d, dual).is_ok_and(|s| {
                (0..s.len()).all(|i| (0..i).all(|j| s[i] != s[j]))
            })
        };
        if distinct(false) && distinct(true) {
            return td;
        }
    }
}

/// Family and `q` for a type over `field` (`q` drawn for type I).
pub fn random_family<R: Rng + ?Sized>(ty: TdType, rng: &mut R) -> Family {
    match ty {
        TdType::I => Family::I { q: random_q(rng) },
        TdType::II => Family::II,
        TdType::IIIPlus | TdType::IIIMinus => Family::III,
        TdType::IV => Family::IV,
    }
}

/// A random parameter array of the given type and diameter.
pub fn random_array<R: Rng + ?Sized>(ty: TdType, field: Field, d: usize, rng: &mut R) -> Result<ParameterArray> {
    let family = random_family(ty, rng);
    let td = random_type_data(&family, field, d, rng);
    generate_parameter_array(&td, d, random_zeta(field, d, rng))
}

/// One slice of the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusKind {
    pub ty: TdType,
    pub field: Field,
}

impl CorpusKind {
    pub fn label(&self) -> String {
        format!("{} over {}", self.ty, self.field)
    }

    /// Diameters this kind admits, up to `max_d`.
    pub fn diameters(&self, max_d: usize) -> Vec<usize> {
        match self.ty {
            TdType::IV => vec![3],
            TdType::IIIPlus => (0..=max_d).filter(|d| d % 2 == 0).collect(),
            TdType::IIIMinus => (1..=max_d).filter(|d| d % 2 == 1).collect(),
            _ => (0..=max_d).collect(),
        }
    }
}

/// The corpus kinds: I over Q, II over Q and `F_11`, III± over Q, IV over
/// `GF(4)`.
pub fn corpus_kinds() -> Vec<CorpusKind> {
    let q = Field::Rationals;
    vec![
        CorpusKind { ty: TdType::I, field: q },
        CorpusKind { ty: TdType::II, field: q },
        CorpusKind {
            ty: TdType::II,
            field: Field::Prime(11),
        },
        CorpusKind { ty: TdType::IIIPlus, field: q },
        CorpusKind { ty: TdType::IIIMinus, field: q },
        CorpusKind {
            ty: TdType::IV,
            field: Field::Gf4,
        },
    ]
}

/// `count` arrays of each corpus kind with diameters cycling up to `max_d`.
pub fn corpus(seed: u64, count: usize, max_d: usize) -> Vec<(CorpusKind, ParameterArray)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for kind in corpus_kinds() {
        let ds = kind.diameters(max_d);
        for k in 0..count {
            let d = ds[k % ds.len()];
            let pa = random_array(kind.ty, kind.field, d, &mut rng).expect("generated data validates");
            out.push((kind, pa));
        }
    }
    out
}

/// Random Leonard data in the given subcase at diameter `d`. When the case
/// needs `ψ`, it is drawn first and `t` (or `φ`) derived from it so that `ψ`
/// lies in the field.
pub fn random_leonard<R: Rng + ?Sized>(case: LeonardCase, d: usize, rng: &mut R) -> LeonardData {
    let field = case.field();
    let ty = case.ty();
    let family = random_family(ty, rng);
    for _ in 0..100_000 {
        let mut td = random_type_data(&family, field, d, rng);
        let zero = field.zero();
        match case {
            LeonardCase::IGeneric | LeonardCase::IIGeneric => {
                if (&td.eig.b * &td.dual.b).is_zero() || (&td.eig.c * &td.dual.c).is_zero() {
                    continue;
                }
            }
            LeonardCase::IBZero => {
                if rng.gen_bool(0.5) {
                    td.eig.b = zero;
                } else {
                    td.dual.b = zero;
                }
            }
            LeonardCase::ICZero => {
                if rng.gen_bool(0.5) {
                    td.eig.c = zero;
                } else {
                    td.dual.c = zero;
                }
            }
            LeonardCase::ITZero => match rng.gen_range(0..4) {
                0 => td.eig.b = zero,
                1 => td.dual.b = zero,
                2 => td.eig.c = zero,
                _ => td.dual.c = zero,
            },
            LeonardCase::IICZero => td.eig.c = zero,
            LeonardCase::IIDualCZero => td.dual.c = zero,
            LeonardCase::IIBothCZero => {
                td.eig.c = zero.clone();
                td.dual.c = zero;
            }
            LeonardCase::IIIMinus | LeonardCase::IV => {}
        }
        if !admissible(&td, d) {
            continue;
        }
        let attempt = match case {
            LeonardCase::IGeneric => {
                let psi = field.random_nonzero(rng);
                let prod = &(&td.eig.b * &td.dual.b) * &(&td.eig.c * &td.dual.c);
                let t = &psi + &(&prod * &psi.inv().expect("nonzero"));
                phi_from_params(ty, &td, d, &t, Some(&psi))
            }
            LeonardCase::IBZero | LeonardCase::ICZero => {
                let t = field.random_nonzero(rng);
                phi_from_params(ty, &td, d, &t, Some(&t))
            }
            LeonardCase::ITZero => phi_from_params(ty, &td, d, &field.zero(), None),
            LeonardCase::IIGeneric | LeonardCase::IIIMinus => {
                let k = if case == LeonardCase::IIGeneric { 4 } else { 1 };
                let psi = field.random(rng);
                let (e, s) = (&td.eig, &td.dual);
                let rest = &(&e.b * &s.c).square() + &(&s.b * &e.c).square();
                let denom = &field.from_i64(k) * &(&e.c * &s.c);
                let t = (&psi.square() - &rest).checked_div(&denom).expect("c c* nonzero");
                phi_from_params(ty, &td, d, &t, Some(&psi))
            }
            LeonardCase::IICZero | LeonardCase::IIDualCZero | LeonardCase::IIBothCZero => {
                phi_from_params(ty, &td, d, &field.random(rng), None)
            }
            LeonardCase::IV => {
                let psi = field.random(rng);
                let phi1 = iv_phi_from_psi(&td, &psi);
                phi_from_params(ty, &td, d, &phi1, Some(&psi))
            }
        };
        match attempt {
            Ok(ld) => return ld,
            Err(Error::NotLeonard(_)) => continue,
            Err(e) => panic!("random Leonard data for {}: {e}", case.label()),
        }
    }
    panic!("no Leonard data found for {} at d = {d}", case.label())
}

/// Validation and distinct eigenvalues on both sides.
fn admissible(td: &TypeData, d: usize) -> bool {
    if td.validate(d).is_err() {
        return false;
    }
    [false, true].into_iter().all(|dual| {
        td.sequence(d, dual)
            .is_ok_and(|s| (0..s.len()).all(|i| (0..i).all(|j| s[i] != s[j])))
    })
}

/// `φ = (a c* + a* c + c c* ψ)(b c* + b* c + c c* + c c* ψ) / (c c*)`.
fn iv_phi_from_psi(td: &TypeData, psi: &Elem) -> Elem {
    let (e, s) = (&td.eig, &td.dual);
    let cc = &e.c * &s.c;
    let x = &(&(&e.a * &s.c) + &(&s.a * &e.c)) + &(&cc * psi);
    let y = &(&(&(&e.b * &s.c) + &(&s.b * &e.c)) + &cc) + &(&cc * psi);
    (&x * &y).checked_div(&cc).expect("c c* nonzero")
}
