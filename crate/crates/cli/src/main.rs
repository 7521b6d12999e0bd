//! `tdpair`: command-line front end for the `tdpair` library.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on success
//! or PASS, 1 on FAIL, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tdpair::brackets::bracket;
use tdpair::drinfeld::{
    check_d4_invariance, check_krawtchouk_relation, check_qgeometric_relation, drinfeld_with_type_data,
    evaluate_specials, krawtchouk_drinfeld, qgeometric_drinfeld,
};
use tdpair::format::{
    parse_array, parse_list, parse_matrices, parse_type_data, render_array, render_list, render_matrices, ArrayFile,
};
use tdpair::leonard::{
    check_tridiagonal_relations, idempotent_path, phi_from_params, realize_matrices, roots, solve_psi, word_path_zeta,
    zeta_from_phi, LeonardCase,
};
use tdpair::params::parse_word;
use tdpair::random::{random_array, random_leonard, rng};
use tdpair::series::{check_identity, evaluate, Identity, QcvForm, SeriesKind, SeriesSpec};
use tdpair::{drinfeld, Elem, Error, Family, Field, LeonardData, TdType};

#[derive(Parser)]
#[command(name = "tdpair", version, about = "Exact Drinfel'd polynomials of sharp tridiagonal systems")]
struct Cli {
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Field override: Q, Fp:<p>, GF4 or GF16.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Apply a D4 word (over s, d, D) to the array before computing.
    #[arg(long, global = true, value_name = "WORD")]
    relative: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an array file; print its base and type.
    Validate { file: PathBuf },
    /// The Drinfel'd polynomial, as ascending coefficients.
    Drinfeld {
        file: PathBuf,
        /// Print the normalized polynomial and the affine map (u, v).
        #[arg(long)]
        normalized: bool,
    },
    /// Compare P and P-hat across all eight relatives.
    D4Check { file: PathBuf },
    /// Evaluate P at the two special points.
    Specials { file: PathBuf },
    /// The bracket scalar [r,s,t] of a type.
    Bracket {
        r: usize,
        s: usize,
        t: usize,
        #[arg(long = "type")]
        ty: TdType,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Leonard systems from type data.
    #[command(subcommand)]
    Leonard(LeonardCmd),
    /// Terminating hypergeometric series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// The Krawtchouk relation for a split sequence.
    Krawtchouk {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// The q-geometric relation for a split sequence.
    Qgeometric {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// Seeded random Leonard systems checked against the matrix oracle.
    Oracle {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
    },
    /// Emit a seeded random array file.
    Random {
        #[arg(long = "type")]
        ty: TdType,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Args)]
struct LeonardInput {
    #[arg(long = "type")]
    ty: TdType,
    /// Type-data file: field, d, q (type I) and a, b, c, a*, b*, c*.
    #[arg(long)]
    data: PathBuf,
    /// The free scalar (phi_1 for type IV).
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[arg(long, allow_hyphen_values = true)]
    psi: Option<String>,
}

#[derive(Subcommand)]
enum LeonardCmd {
    /// The sequences phi and phi-down, with zeta.
    Phi(LeonardInput),
    /// Closed-form roots of P-hat, each checked by evaluation.
    Roots(LeonardInput),
    /// A matrix pair realizing the system, as a matrix file.
    Realize(LeonardInput),
    /// The array file of the system.
    Array(LeonardInput),
    /// Recover zeta from a matrix file.
    Oracle { file: PathBuf },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Sum a terminating series.
    Eval {
        #[arg(long)]
        kind: SeriesKind,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        num: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        den: String,
        #[arg(long, allow_hyphen_values = true)]
        arg: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Compare both sides of a summation formula.
    Check {
        /// q-saalschutz, saalschutz, chu-vandermonde, q-chu-vandermonde,
        /// q-chu-vandermonde-shifted or binomial.
        #[arg(long)]
        identity: String,
        #[arg(long)]
        n: usize,
        /// a,b,c for the Saalschutz sums; b,c for Chu-Vandermonde; z for binomial.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
}

enum Failure {
    /// A check ran and did not hold.
    Fail,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Fail) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    let res = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    res.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn elem(field: Field, text: &str) -> Result<Elem, Failure> {
    field.parse_elem(text).map_err(|e| Failure::Input(e.to_string()))
}

fn list(field: Field, text: &str) -> Result<Vec<Elem>, Failure> {
    Ok(parse_list(text, field)?)
}

/// Prints `body` and turns a failed check into exit status 1.
fn verdict(ok: bool, body: String) -> Outcome {
    if ok {
        Ok(body + "PASS\n")
    } else {
        print!("{body}FAIL\n");
        Err(Failure::Fail)
    }
}

impl Cli {
    fn load_array(&self, path: &Path) -> Result<ArrayFile, Failure> {
        let mut f = parse_array(&read(path)?, self.field)?;
        if let Some(word) = &self.relative {
            let gens = parse_word(word)?;
            let d = f.array.d();
            f.type_data = f.type_data.map(|td| td.d4_apply(&gens, d));
            f.array = f.array.d4_apply(&gens)?;
        }
        Ok(f)
    }

    fn field_or(&self, default: Field) -> Field {
        self.field.unwrap_or(default)
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => {
            let f = cli.load_array(file)?;
            Ok(format!("beta: {}\ntype: {}\n", f.array.beta(), f.array.td_type()))
        }
        Command::Drinfeld { file, normalized } => {
            let f = cli.load_array(file)?;
            let r = match &f.type_data {
                Some(td) if f.array.d() >= 1 => drinfeld_with_type_data(&f.array, td)?,
                _ => drinfeld(&f.array)?,
            };
            Ok(if *normalized {
                format!("{}\nu: {}\nv: {}\n", r.p_hat, r.u, r.v)
            } else {
                format!("{}\n", r.p)
            })
        }
        Command::D4Check { file } => {
            let f = cli.load_array(file)?;
            match check_d4_invariance(&f.array)? {
                None => verdict(true, String::new()),
                Some(m) => {
                    let rel = if m.relative.is_empty() { "identity" } else { m.relative };
                    verdict(
                        false,
                        format!("relative {rel}: {} expected {} got {}\n", m.quantity, m.expected, m.actual),
                    )
                }
            }
        }
        Command::Specials { file } => {
            let s = evaluate_specials(&cli.load_array(file)?.array)?;
            let body = format!(
                "first: {}\nexpected: {}\nsecond: {}\nexpected: {}\n",
                s.at_first, s.expected_first, s.at_second, s.expected_second
            );
            verdict(s.holds(), body)
        }
        Command::Bracket { r, s, t, ty, q } => {
            let default = if *ty == TdType::IV { Field::Gf4 } else { Field::Rationals };
            let field = cli.field_or(default);
            let q = q.as_deref().map(|q| elem(field, q)).transpose()?;
            let family = Family::of(*ty, q.as_ref())?;
            Ok(format!("{}\n", bracket(*r, *s, *t, &family, field, r + s + t)?))
        }
        Command::Leonard(cmd) => leonard(cli, cmd),
        Command::Series(cmd) => series(cli, cmd),
        Command::Krawtchouk { d, zeta } => {
            let zeta = split_zeta(cli.field_or(Field::Rationals), *d, zeta)?;
            let check = check_krawtchouk_relation(&zeta)?;
            verdict(check.holds(), format!("{}\n", krawtchouk_drinfeld(&zeta)?))
        }
        Command::Qgeometric { d, q, zeta } => {
            let field = cli.field_or(Field::Rationals);
            let q = elem(field, q)?;
            let zeta = split_zeta(field, *d, zeta)?;
            let check = check_qgeometric_relation(&zeta, &q)?;
            verdict(check.holds(), format!("{}\n", qgeometric_drinfeld(&zeta, &q)?))
        }
        Command::Oracle { count, max_d } => oracle_sweep(cli.seed, *count, *max_d),
        Command::Random { ty, d } => {
            let default = match ty {
                TdType::IV => Field::Gf4,
                _ => Field::Rationals,
            };
            let mut rng = rng(cli.seed);
            let pa = random_array(*ty, cli.field_or(default), *d, &mut rng)?;
            Ok(render_array(&pa, None))
        }
    }
}

/// `ζ_0..ζ_d`; a list of `d` entries gets the leading 1 prepended.
fn split_zeta(field: Field, d: usize, text: &str) -> Result<Vec<Elem>, Failure> {
    let mut zeta = list(field, text)?;
    if zeta.len() == d {
        zeta.insert(0, field.one());
    }
    if zeta.len() != d + 1 {
        return Err(Failure::Input(format!("--zeta needs {} entries, got {}", d + 1, zeta.len())));
    }
    Ok(zeta)
}

fn leonard_data(cli: &Cli, input: &LeonardInput) -> Result<LeonardData, Failure> {
    let file = parse_type_data(&read(&input.data)?, input.ty, cli.field)?;
    let field = file.type_data.field();
    let t = elem(field, &input.t)?;
    let psi = input.psi.as_deref().map(|p| elem(field, p)).transpose()?;
    Ok(phi_from_params(input.ty, &file.type_data, file.d, &t, psi.as_ref())?)
}

fn leonard(cli: &Cli, cmd: &LeonardCmd) -> Outcome {
    match cmd {
        LeonardCmd::Phi(input) => {
            let ld = leonard_data(cli, input)?;
            Ok(format!(
                "phi: {}\nphi_down: {}\nzeta: {}\n",
                render_list(&ld.phi),
                render_list(&ld.phi2),
                render_list(&ld.zeta())
            ))
        }
        LeonardCmd::Roots(input) => {
            let mut ld = leonard_data(cli, input)?;
            let rs = match roots(&ld) {
                Err(Error::MissingPsi) => {
                    let sols = solve_psi(ld.ty, &ld.type_data, &ld.t)?;
                    let psi = sols
                        .into_iter()
                        .next()
                        .ok_or_else(|| Failure::Input("psi has no solution in this field".into()))?;
                    ld.psi = Some(psi);
                    roots(&ld)?
                }
                other => other?,
            };
            let pa = ld.parameter_array()?;
            let p_hat = drinfeld_with_type_data(&pa, &ld.type_data)?.p_hat;
            let mut body = String::new();
            if let Some(psi) = &ld.psi {
                let _ = writeln!(body, "psi: {psi}");
            }
            let _ = writeln!(body, "roots: {}", render_list(&rs));
            verdict(rs.iter().all(|r| p_hat.eval(r).is_zero()), body)
        }
        LeonardCmd::Realize(input) => {
            let ld = leonard_data(cli, input)?;
            let pa = ld.parameter_array()?;
            let pair = realize_matrices(pa.theta(), pa.theta_star(), &ld.phi)?;
            Ok(render_matrices(pa.theta(), pa.theta_star(), &pair))
        }
        LeonardCmd::Array(input) => {
            let ld = leonard_data(cli, input)?;
            Ok(render_array(&ld.parameter_array()?, Some(&ld.type_data)))
        }
        LeonardCmd::Oracle { file } => {
            let m = parse_matrices(&read(file)?, cli.field)?;
            let word = match word_path_zeta(&m.pair, &m.theta, &m.theta_star) {
                Ok(z) => z,
                Err(Error::NotSplitConsistent(msg)) => return verdict(false, format!("{msg}\n")),
                Err(e) => return Err(e.into()),
            };
            let body = format!("zeta: {}\n", render_list(&word));
            match idempotent_path(&m.pair, &m.theta, &m.theta_star) {
                Ok(split) if split.zeta == word => Ok(body),
                Ok(split) => verdict(false, format!("{body}idempotent path: {}\n", render_list(&split.zeta))),
                Err(Error::NotSplitConsistent(msg)) => verdict(false, format!("{body}{msg}\n")),
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn series(cli: &Cli, cmd: &SeriesCmd) -> Outcome {
    let field = cli.field_or(Field::Rationals);
    match cmd {
        SeriesCmd::Eval { kind, num, den, arg, q } => {
            let q = q.as_deref().map(|q| elem(field, q)).transpose()?;
            let spec = SeriesSpec::new(*kind, list(field, num)?, list(field, den)?, elem(field, arg)?, q)?;
            Ok(format!("{}\n", evaluate(&spec)))
        }
        SeriesCmd::Check { identity, n, params, q } => {
            let id = build_identity(identity, *n, &list(field, params)?, q.as_deref().map(|q| elem(field, q)).transpose()?)?;
            match check_identity(&id)? {
                tdpair::brackets::Check::Holds => verdict(true, String::new()),
                tdpair::brackets::Check::Fails { lhs, rhs } => verdict(false, format!("lhs: {lhs}\nrhs: {rhs}\n")),
            }
        }
    }
}

fn build_identity(name: &str, n: usize, params: &[Elem], q: Option<Elem>) -> Result<Identity, Failure> {
    let want = |k: usize| -> Result<(), Failure> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Input(format!("{name} takes {k} parameters, got {}", params.len())))
        }
    };
    let need_q = || q.clone().ok_or_else(|| Failure::Input(format!("{name} needs --q")));
    let p = |i: usize| params[i].clone();
    Ok(match name {
        "q-saalschutz" => {
            want(3)?;
            Identity::QSaalschutz { n, a: p(0), b: p(1), c: p(2), q: need_q()? }
        }
        "saalschutz" => {
            want(3)?;
            Identity::Saalschutz { n, a: p(0), b: p(1), c: p(2) }
        }
        "chu-vandermonde" => {
            want(2)?;
            Identity::ChuVandermonde { n, b: p(0), c: p(1) }
        }
        "q-chu-vandermonde" | "q-chu-vandermonde-shifted" => {
            want(2)?;
            let form = if name.ends_with("shifted") { QcvForm::Shifted } else { QcvForm::Unit };
            Identity::QChuVandermonde { n, b: p(0), c: p(1), q: need_q()?, form }
        }
        "binomial" => {
            want(1)?;
            Identity::Binomial { n, z: p(0) }
        }
        other => return Err(Failure::Input(format!("unknown identity `{other}`"))),
    })
}

/// One line per Leonard subcase: realization, both oracle paths and the
/// tridiagonal relations against the running products of `φ`.
fn oracle_sweep(seed: u64, count: usize, max_d: usize) -> Outcome {
    let mut rng = rng(seed);
    let mut body = String::new();
    let mut all = true;
    for case in LeonardCase::ALL {
        let ds = case.diameters(max_d.max(1));
        if ds.is_empty() {
            continue;
        }
        let mut ok = true;
        for k in 0..count {
            let ld = random_leonard(case, ds[k % ds.len()], &mut rng);
            let pa = ld.parameter_array()?;
            let (theta, theta_star) = (pa.theta(), pa.theta_star());
            let pair = realize_matrices(theta, theta_star, &ld.phi)?;
            let expected = zeta_from_phi(pa.field(), &ld.phi);
            let word_ok = word_path_zeta(&pair, theta, theta_star).is_ok_and(|z| z == expected);
            let split_ok = idempotent_path(&pair, theta, theta_star).is_ok_and(|s| s.zeta == expected);
            let tri_ok = check_tridiagonal_relations(&pair, theta, theta_star)?.holds();
            ok &= word_ok && split_ok && tri_ok;
        }
        all &= ok;
        let _ = writeln!(body, "{:<22} {}", case.label(), if ok { "ok" } else { "mismatch" });
    }
    verdict(all, body)
}
