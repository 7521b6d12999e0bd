use rand::Rng;
use tdpair::field::q_pochhammer;
use tdpair::leonard::LeonardCase;
use tdpair::random::{random_leonard, random_q, rng};
use tdpair::series::{
    check_chu_vandermonde, check_identity, check_q_chu_vandermonde, check_q_saalschutz, check_saalschutz,
    partial_sums, proof_pipeline, run_pipeline, Identity, QcvForm, SeriesKind, SeriesSpec,
};
use tdpair::{Elem, Error, Field};

const INSTANCES: usize = 200;

/// Runs `make` until `INSTANCES` applicable instances pass.
fn exercise(mut make: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Identity, seed: u64) {
    let mut rng = rng(seed);
    let mut passed = 0;
    let mut attempts = 0;
    while passed < INSTANCES {
        attempts += 1;
        assert!(attempts < 20 * INSTANCES, "too few applicable instances");
        let id = make(&mut rng);
        match check_identity(&id) {
            Ok(c) => {
                assert!(c.holds(), "{} failed: {id:?} {c:?}", id.name());
                passed += 1;
            }
            Err(Error::NotApplicable(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

fn r<R: Rng>(rng: &mut R) -> Elem {
    Field::Rationals.random(rng)
}

#[test]
fn q_saalschutz_random() {
    exercise(
        |rng| Identity::QSaalschutz {
            n: rng.gen_range(0..=8),
            a: r(rng),
            b: r(rng),
            c: r(rng),
            q: random_q(rng),
        },
        1,
    );
}

#[test]
fn saalschutz_random() {
    exercise(
        |rng| Identity::Saalschutz {
            n: rng.gen_range(0..=8),
            a: r(rng),
            b: r(rng),
            c: r(rng),
        },
        2,
    );
}

#[test]
fn chu_vandermonde_random() {
    exercise(
        |rng| Identity::ChuVandermonde {
            n: rng.gen_range(0..=8),
            b: r(rng),
            c: r(rng),
        },
        3,
    );
}

#[test]
fn q_chu_vandermonde_random() {
    for (form, seed) in [(QcvForm::Unit, 4), (QcvForm::Shifted, 5)] {
        exercise(
            |rng| Identity::QChuVandermonde {
                n: rng.gen_range(0..=8),
                b: r(rng),
                c: r(rng),
                q: random_q(rng),
                form,
            },
            seed,
        );
    }
}

#[test]
fn identities_over_a_prime_field() {
    let f = Field::prime(101).unwrap();
    let mut rng = rng(6);
    let mut passed = 0;
    for _ in 0..400 {
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        let n = rng.gen_range(0..=8);
        let qq = f.random_nonzero(&mut rng);
        for check in [
            check_saalschutz(n, &a, &b, &c),
            check_chu_vandermonde(n, &b, &c),
            check_q_saalschutz(n, &a, &b, &c, &qq),
            check_q_chu_vandermonde(n, &b, &c, &qq, QcvForm::Unit),
            check_q_chu_vandermonde(n, &b, &c, &qq, QcvForm::Shifted),
        ] {
            match check {
                Ok(ch) => {
                    assert!(ch.holds());
                    passed += 1;
                }
                Err(Error::NotApplicable(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(passed > 1000);
}

#[test]
fn partial_sums_follow_pochhammer_terms() {
    let mut rng = rng(7);
    for _ in 0..100 {
        let n = rng.gen_range(0..=8i64);
        let basic = rng.gen_bool(0.5);
        let (kind, num, q) = if basic {
            let qq = random_q(&mut rng);
            let top = qq.powi(-2 * n).unwrap();
            (SeriesKind::Phi32, vec![r(&mut rng), top, r(&mut rng)], Some(qq))
        } else {
            let top = Field::Rationals.from_i64(-n);
            (SeriesKind::F32, vec![r(&mut rng), r(&mut rng), top], None)
        };
        let den = vec![r(&mut rng), r(&mut rng)];
        let Ok(spec) = SeriesSpec::new(kind, num, den, r(&mut rng), q) else { continue };
        let sums = partial_sums(&spec);
        let terms = spec.terms();
        assert_eq!(sums.len(), spec.order() + 1);
        for k in 0..spec.order() {
            assert_eq!(sums[k + 1], &sums[k] + &spec.term(k + 1));
            assert_eq!(terms[k + 1], spec.term(k + 1));
        }
    }
}

#[test]
fn q_pochhammer_in_base_q_squared() {
    let qq = Field::Rationals.from_i64(2);
    let spec = SeriesSpec::new(
        SeriesKind::Phi21,
        vec![qq.powi(-2).unwrap(), Field::Rationals.from_i64(3)],
        vec![Field::Rationals.from_i64(5)],
        Field::Rationals.from_i64(1),
        Some(qq.clone()),
    )
    .unwrap();
    // term 1 = (1 - 1/4)(1 - 3) / ((1 - 5)(1 - 4))
    let p = qq.square();
    let expected = q_pochhammer(&p.inv().unwrap(), &p, 1);
    assert_eq!(spec.term(1), &(&expected * &Field::Rationals.from_i64(-2)) * &Field::Rationals.from_ratio(1, 12).unwrap());
}

#[test]
fn root_proofs_instantiated_from_leonard_data() {
    let mut rng = rng(8);
    for case in LeonardCase::ALL {
        if case == LeonardCase::IV {
            continue;
        }
        let ds = case.diameters(6);
        let mut done = 0;
        let mut attempts = 0;
        while done < 12 {
            attempts += 1;
            assert!(attempts < 500, "{}: too few applicable instances", case.label());
            let ld = random_leonard(case, ds[done % ds.len()], &mut rng);
            let x = Field::Rationals.random_nonzero(&mut rng);
            match proof_pipeline(&ld, &x) {
                Ok(p) => {
                    let report = run_pipeline(&ld, &p).unwrap();
                    assert!(report.holds(), "{} d={}: {report:?} {p:?}", case.label(), ld.d);
                    done += 1;
                }
                Err(Error::NotApplicable(_)) => {}
                Err(e) => panic!("{}: {e}", case.label()),
            }
        }
    }
}
