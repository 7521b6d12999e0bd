//! The acceptance suite: one PASS/FAIL line per criterion, exact equality
//! throughout. Runs without the libtest harness so the lines reach stdout.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tdpair::brackets::{bracket, check_eta_expansion};
use tdpair::drinfeld::{
    check_d4_invariance, check_krawtchouk_relation, check_qgeometric_relation, drinfeld, evaluate_specials,
    normalized_drinfeld,
};
use tdpair::leonard::{
    check_tridiagonal_relations, idempotent_path, iv_psi_shift, realize_matrices, roots, solve_psi, word_path_zeta,
    zeta_from_phi, LeonardCase,
};
use tdpair::random::{corpus, corpus_kinds, random_leonard, random_q, random_zeta, rng};
use tdpair::series::{check_identity, proof_pipeline, run_pipeline, Identity, QcvForm};
use tdpair::{Elem, Error, Family, Field, ParameterArray, TdType};

const SEED: u64 = 20_240_917;
const PER_KIND: usize = 50;
const MAX_D: usize = 8;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn label(pa: &ParameterArray) -> String {
    format!("{} over {} d={}", pa.td_type(), pa.field(), pa.d())
}

fn shared_corpus() -> Vec<ParameterArray> {
    corpus(SEED, PER_KIND, MAX_D).into_iter().map(|(_, pa)| pa).collect()
}

fn d4_invariance() -> Outcome {
    let arrays = shared_corpus();
    for kind in corpus_kinds() {
        let n = arrays.iter().filter(|pa| pa.td_type() == kind.ty && pa.field() == kind.field).count();
        ensure(n >= PER_KIND, || format!("only {n} arrays of {}", kind.label()))?;
    }
    for pa in &arrays {
        if let Some(m) = check_d4_invariance(pa).map_err(|e| e.to_string())? {
            return Err(format!("{}: relative `{}` changes {}", label(pa), m.relative, m.quantity));
        }
    }
    Ok(format!("{} arrays x 8 relatives", arrays.len()))
}

fn evaluations() -> Outcome {
    let arrays = shared_corpus();
    for pa in &arrays {
        let s = evaluate_specials(pa).map_err(|e| e.to_string())?;
        ensure(s.holds(), || format!("{}: {s:?}", label(pa)))?;
        if pa.td_type() == TdType::IIIPlus && pa.d() >= 2 {
            ensure(s.at_first.is_zero() && s.at_second.is_zero(), || format!("{}: III+ nonzero", label(pa)))?;
        } else {
            let down = pa.zeta_ddown().map_err(|e| e.to_string())?;
            ensure(s.at_first == pa.zeta()[pa.d()] && s.at_second == down[pa.d()], || label(pa))?;
        }
    }
    Ok(format!("{} arrays", arrays.len()))
}

fn normalization() -> Outcome {
    let arrays = shared_corpus();
    for pa in &arrays {
        let r = drinfeld(pa).map_err(|e| e.to_string())?;
        ensure(r.p_hat == r.p.compose_affine(&r.u, &r.v), || format!("{}: P̂ ≠ P(uλ+v)", label(pa)))?;
        if matches!(pa.td_type(), TdType::IIIPlus | TdType::IV) {
            ensure(r.p_hat == r.p, || format!("{}: P̂ ≠ P", label(pa)))?;
        }
    }
    Ok(format!("{} arrays", arrays.len()))
}

fn root_count(ty: TdType, d: usize) -> usize {
    match ty {
        TdType::I | TdType::II => d,
        TdType::IIIMinus => (d + 1) / 2,
        _ => 2,
    }
}

fn roots_vanish() -> Outcome {
    let mut rng = rng(SEED + 4);
    let mut total = 0;
    for case in LeonardCase::ALL {
        let ds = case.diameters(6);
        for k in 0..20 {
            let ld = random_leonard(case, ds[k % ds.len()], &mut rng);
            let pa = ld.parameter_array().map_err(|e| e.to_string())?;
            let p_hat = normalized_drinfeld(&pa, &ld.type_data).map_err(|e| e.to_string())?;
            let rs = roots(&ld).map_err(|e| e.to_string())?;
            let tag = || format!("{} d={}", case.label(), ld.d);
            ensure(rs.len() == root_count(ld.ty, ld.d), || format!("{}: {} roots", tag(), rs.len()))?;
            for r in &rs {
                ensure(p_hat.eval(r).is_zero(), || format!("{}: P̂({r}) ≠ 0", tag()))?;
            }
            if case == LeonardCase::IV {
                let psi = ld.psi.as_ref().expect("type IV carries ψ");
                let shift = iv_psi_shift(&ld.type_data).map_err(|e| e.to_string())?;
                let sols = solve_psi(ld.ty, &ld.type_data, &ld.t).map_err(|e| e.to_string())?;
                let other = psi + &shift;
                ensure(sols.contains(psi) && sols.contains(&other), || format!("{}: ψ solutions {sols:?}", tag()))?;
                ensure(sols.len() == if shift.is_zero() { 1 } else { 2 }, || tag())?;
            }
            total += 1;
        }
    }
    Ok(format!("{total} Leonard systems in {} subcases", LeonardCase::ALL.len()))
}

fn oracle() -> Outcome {
    let mut rng = rng(SEED + 5);
    let mut total = 0;
    for case in LeonardCase::ALL {
        let ds = case.diameters(6);
        for k in 0..12 {
            let ld = random_leonard(case, ds[k % ds.len()], &mut rng);
            let pa = ld.parameter_array().map_err(|e| e.to_string())?;
            let (theta, theta_star) = (pa.theta(), pa.theta_star());
            let tag = || format!("{} d={}", case.label(), ld.d);
            let mp = realize_matrices(theta, theta_star, &ld.phi).map_err(|e| e.to_string())?;
            let expected = zeta_from_phi(pa.field(), &ld.phi);
            let word = word_path_zeta(&mp, theta, theta_star).map_err(|e| format!("{}: {e}", tag()))?;
            ensure(word == expected, || format!("{}: word path", tag()))?;
            let split = idempotent_path(&mp, theta, theta_star).map_err(|e| format!("{}: {e}", tag()))?;
            ensure(split.zeta == expected, || format!("{}: idempotent path", tag()))?;
            let report = check_tridiagonal_relations(&mp, theta, theta_star).map_err(|e| e.to_string())?;
            ensure(report.holds(), || format!("{}: {report:?}", tag()))?;
            total += 1;
        }
    }
    Ok(format!("{total} realizations, d <= 6"))
}

fn bracket_families() -> Vec<(Family, Field, usize)> {
    let q2 = Field::Rationals.from_i64(2);
    vec![
        (Family::I { q: q2 }, Field::Rationals, 10),
        (Family::II, Field::Rationals, 10),
        (Family::III, Field::Rationals, 10),
        (Family::IV, Field::Gf4, 3),
    ]
}

fn brackets() -> Outcome {
    let mut checked = 0;
    for (family, field, max) in bracket_families() {
        let b = |r, s, t| bracket(r, s, t, &family, field, max).map_err(|e| format!("{family:?} [{r},{s},{t}]: {e}"));
        for r in 0..=max {
            for s in 0..=max - r {
                for t in 0..=max - r - s {
                    let x = b(r, s, t)?;
                    for (p0, p1, p2) in [(r, t, s), (s, r, t), (s, t, r), (t, r, s), (t, s, r)] {
                        ensure(b(p0, p1, p2)? == x, || format!("{family:?}: [{r},{s},{t}] not symmetric"))?;
                    }
                    if r == 0 || s == 0 || t == 0 {
                        ensure(x.is_one(), || format!("{family:?}: [{r},{s},{t}] = {x}"))?;
                    }
                    checked += 1;
                    for u in 0..=max - r - s - t {
                        let lhs = &b(r, s, t + u)? * &b(t, u, r + s)?;
                        let rhs = &b(s, u, r + t)? * &b(r, t, s + u)?;
                        ensure(lhs == rhs, || format!("{family:?}: double product at ({r},{s},{t},{u})"))?;
                    }
                }
            }
        }
    }
    let arrays = shared_corpus();
    for pa in &arrays {
        for i in 0..=pa.d() {
            let c = check_eta_expansion(pa, i).map_err(|e| format!("{}: {e}", label(pa)))?;
            ensure(c.holds(), || format!("{}: η_{i} expansion", label(pa)))?;
        }
    }
    Ok(format!("{checked} triples, η-expansion on {} arrays", arrays.len()))
}

fn relations() -> Outcome {
    let mut rng = rng(SEED + 7);
    let mut total = 0;
    for d in 0..=MAX_D {
        for _ in 0..6 {
            let zeta = random_zeta(Field::Rationals, d, &mut rng);
            let k = check_krawtchouk_relation(&zeta).map_err(|e| e.to_string())?;
            ensure(k.holds(), || format!("Krawtchouk d={d}: {k:?}"))?;
            let q = random_q(&mut rng);
            let g = check_qgeometric_relation(&zeta, &q).map_err(|e| e.to_string())?;
            ensure(g.holds(), || format!("q-geometric d={d} q={q}"))?;
            total += 2;
        }
    }
    Ok(format!("{total} relations, d <= {MAX_D}"))
}

fn small<R: Rng>(rng: &mut R) -> Elem {
    Field::Rationals.random(rng)
}

/// `count` passing instances of `make`, skipping inadmissible draws.
fn run_identities(name: &str, count: usize, rng: &mut ChaCha8Rng, mut make: impl FnMut(&mut ChaCha8Rng) -> Identity) -> Result<(), String> {
    let (mut passed, mut attempts) = (0, 0);
    while passed < count {
        attempts += 1;
        ensure(attempts < 20 * count, || format!("{name}: too few admissible instances"))?;
        let id = make(rng);
        match check_identity(&id) {
            Ok(c) => {
                ensure(c.holds(), || format!("{name}: {id:?}"))?;
                passed += 1;
            }
            Err(Error::NotApplicable(_)) => {}
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok(())
}

fn series() -> Outcome {
    const N: usize = 200;
    let mut rng = rng(SEED + 8);
    run_identities("q-saalschutz", N, &mut rng, |g| Identity::QSaalschutz {
        n: g.gen_range(0..=8),
        a: small(g),
        b: small(g),
        c: small(g),
        q: random_q(g),
    })?;
    run_identities("saalschutz", N, &mut rng, |g| Identity::Saalschutz {
        n: g.gen_range(0..=8),
        a: small(g),
        b: small(g),
        c: small(g),
    })?;
    run_identities("chu-vandermonde", N, &mut rng, |g| Identity::ChuVandermonde {
        n: g.gen_range(0..=8),
        b: small(g),
        c: small(g),
    })?;
    for form in [QcvForm::Unit, QcvForm::Shifted] {
        run_identities("q-chu-vandermonde", N, &mut rng, |g| Identity::QChuVandermonde {
            n: g.gen_range(0..=8),
            b: small(g),
            c: small(g),
            q: random_q(g),
            form,
        })?;
    }
    let mut pipelines = 0;
    for case in LeonardCase::ALL {
        if case == LeonardCase::IV {
            continue;
        }
        let ds = case.diameters(6);
        let (mut done, mut attempts) = (0, 0);
        while done < 20 {
            attempts += 1;
            ensure(attempts < 1000, || format!("{}: too few proof instances", case.label()))?;
            let ld = random_leonard(case, ds[done % ds.len()], &mut rng);
            let x = Field::Rationals.random_nonzero(&mut rng);
            match proof_pipeline(&ld, &x) {
                Ok(p) => {
                    let report = run_pipeline(&ld, &p).map_err(|e| e.to_string())?;
                    ensure(report.holds(), || format!("{} d={}: {report:?}", case.label(), ld.d))?;
                    done += 1;
                }
                Err(Error::NotApplicable(_)) => {}
                Err(e) => return Err(format!("{}: {e}", case.label())),
            }
        }
        pipelines += done;
    }
    Ok(format!("5 x {N} identities, {pipelines} proof instantiations"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("D4 invariance of P and P-hat", d4_invariance),
        ("special-point evaluations", evaluations),
        ("normalization P-hat = P(u x + v)", normalization),
        ("closed-form roots", roots_vanish),
        ("split-sequence oracle", oracle),
        ("bracket identities", brackets),
        ("Krawtchouk and q-geometric relations", relations),
        ("series certificates", series),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
