use num_bigint::BigInt;
use num_rational::BigRational;

use tdpair::brackets::{bracket, check_eta_expansion};
use tdpair::random::corpus;
use tdpair::{Family, Field};

const MAX: usize = 10;

fn triples(max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=max).flat_map(move |r| (0..=max - r).flat_map(move |s| (0..=max - r - s).map(move |t| (r, s, t))))
}

/// Integer product `f(0 + 1) ... f(n)` as a rational.
fn prod(n: usize, f: impl Fn(usize) -> BigInt) -> BigRational {
    BigRational::from_integer((1..=n).map(f).product())
}

/// The bracket quotient for a "factorial-like" `g`, computed with big rationals.
fn oracle(r: usize, s: usize, t: usize, g: &dyn Fn(usize) -> BigRational) -> BigRational {
    g(r + s) * g(r + t) * g(s + t) / (g(r) * g(s) * g(t) * g(r + s + t))
}

fn as_rational(x: &tdpair::Elem) -> BigRational {
    x.as_rational().expect("rational").clone()
}

#[test]
fn type_one_matches_big_rational_oracle() {
    for qv in [2i64, 3] {
        let q = Field::Rationals.from_i64(qv);
        let fam = Family::I { q };
        let q2 = BigInt::from(qv * qv);
        let g = |n: usize| prod(n, |k| BigInt::from(1) - q2.pow(k as u32));
        for (r, s, t) in triples(MAX) {
            let got = bracket(r, s, t, &fam, Field::Rationals, MAX).unwrap();
            assert_eq!(as_rational(&got), oracle(r, s, t, &g), "q={qv} [{r},{s},{t}]");
        }
    }
}

#[test]
fn type_two_matches_big_rational_oracle() {
    let g = |n: usize| prod(n, BigInt::from);
    for (r, s, t) in triples(MAX) {
        let got = bracket(r, s, t, &Family::II, Field::Rationals, MAX).unwrap();
        assert_eq!(as_rational(&got), oracle(r, s, t, &g), "[{r},{s},{t}]");
    }
}

#[test]
fn type_three_matches_big_rational_oracle() {
    let g = |n: usize| prod(n / 2, BigInt::from);
    for (r, s, t) in triples(MAX) {
        let got = bracket(r, s, t, &Family::III, Field::Rationals, MAX).unwrap();
        let want = if r % 2 == 1 && s % 2 == 1 && t % 2 == 1 {
            BigRational::from_integer(0.into())
        } else {
            oracle(r, s, t, &g)
        };
        assert_eq!(as_rational(&got), want, "[{r},{s},{t}]");
    }
}

#[test]
fn type_three_all_odd_vanishes() {
    for (r, s, t) in [(1, 1, 3), (1, 1, 1), (3, 3, 3), (1, 5, 3)] {
        assert!(bracket(r, s, t, &Family::III, Field::Rationals, 10).unwrap().is_zero());
    }
}

#[test]
fn type_four_domain() {
    let f = Field::Gf4;
    for (r, s, t) in triples(3) {
        let x = bracket(r, s, t, &Family::IV, f, 3);
        if r == 0 || s == 0 || t == 0 {
            assert!(x.unwrap().is_one());
        } else {
            assert!(x.unwrap().is_zero());
        }
    }
    assert!(bracket(1, 1, 2, &Family::IV, Field::Gf4, 4).is_err());
}

#[test]
fn out_of_range_is_an_error() {
    assert!(bracket(2, 2, 2, &Family::II, Field::Rationals, 5).is_err());
}

#[test]
fn prime_field_brackets_reduce_the_rational_ones() {
    let p = Field::prime(13).unwrap();
    for (r, s, t) in triples(6) {
        let over_q = bracket(r, s, t, &Family::II, Field::Rationals, 6).unwrap();
        let x = as_rational(&over_q);
        let reduced = p
            .parse_elem(&format!("{}/{}", x.numer(), x.denom()))
            .unwrap();
        assert_eq!(bracket(r, s, t, &Family::II, p, 6).unwrap(), reduced, "[{r},{s},{t}]");
    }
}

#[test]
fn eta_expansion_on_corpus() {
    for (kind, pa) in corpus(77, 10, 7) {
        for i in 0..=pa.d() {
            assert!(check_eta_expansion(&pa, i).unwrap().holds(), "{} d={} i={i}", kind.label(), pa.d());
        }
    }
}
