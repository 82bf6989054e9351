//! Command-line front end: parse inputs, dispatch to library operations,
//! emit exact results and certificates.
//!
//! Exit codes: 0 success, 1 internal assertion or verification failure,
//! 2 invalid input, 3 unsupported dimension/mode.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;

use lojexp::closure::{closure_generators, contains_closure, power_oracle_member};
use lojexp::error::EngineError;
use lojexp::exponent::{
    lct_diagonal_oracle, lct_filtration, loj_filtration, sharpness_witness, theta, LojValue,
};
use lojexp::families::{analyze, walls};
use lojexp::filtration::FiltrationSpec;
use lojexp::infinity::{gamma_infinity, loj_infinity_min, loj_infinity_min_local, nondegenerate_at_infinity};
use lojexp::io::{
    loj_value_string, parse_family, parse_filtration, parse_ideal, parse_map, parse_table,
    CertificateJson, ChamberReportJson, IdealJson, LojJson, MilnorJson, MixedJson,
    NondegeneracyJson, PolyhedronJson, RatStr, SharpnessJson, TeissierJson, ThetaJson, WallJson,
};
use lojexp::lattice::{ExpVec, WeightVec};
use lojexp::multiplicity::{check_teissier, milnor_and_gradient, mixed_multiplicities};
use lojexp::polyhedron::NewtonPolyhedron;
use lojexp::rat::{format_rat, parse_rat, rat_int, Rat};
use lojexp::testkit;

#[derive(Parser)]
#[command(
    name = "lojexp",
    about = "Exact polyhedral engine for Lojasiewicz exponents, log canonical thresholds, and mixed multiplicities of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputFlags {
    /// Emit the full JSON report instead of the plain value.
    #[arg(long)]
    json: bool,
    /// Additionally run the matching brute-force oracle and report agreement.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Newton polyhedron of an ideal: vertices and facet list.
    Facets {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Generators of the integral closure.
    Closure {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Membership of a rational point in the Newton polyhedron.
    Member {
        #[arg(long)]
        ideal: String,
        /// Comma-separated rational coordinates, e.g. "1,4" or "3/2,5".
        #[arg(long)]
        point: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Containment b^q inside closure(a^p), with certificate.
    Contain {
        #[arg(long)]
        b: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Lojasiewicz exponent Loj_b(a) for ideals or filtrations.
    Loj {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Log canonical threshold of an ideal or filtration.
    Lct {
        #[arg(long)]
        input: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Theta invariant with the rigidity classification.
    Theta {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Mixed multiplicities of an m-primary pair.
    Mixed {
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
        #[arg(long)]
        n0: Option<i64>,
        /// Also run the Teissier-type inequality checks.
        #[arg(long)]
        teissier: bool,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Milnor number and gradient exponent for a Brieskorn polynomial.
    Milnor {
        /// Comma-separated exponents, e.g. "3,4".
        #[arg(long)]
        exponents: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Wall-chamber analysis of a one-parameter family.
    Family {
        /// "analyze" or "walls".
        action: String,
        file: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Sharpness construction for a finite valuation set.
    Sharpness {
        /// Semicolon-separated weight pairs, e.g. "1,1;3,2".
        #[arg(long)]
        weights: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Newton nondegeneracy at infinity for a plane polynomial map.
    InfinityCheck {
        #[arg(long)]
        map: String,
        /// Print the Newton polyhedron at infinity instead of the verdict.
        #[arg(long)]
        gamma: bool,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Finite-minimum exponent at infinity over a divisor table.
    InfinityMin {
        #[arg(long)]
        table: String,
        /// Restrict to rows with these labels (local variant).
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Randomized property suites (bit-deterministic for a fixed seed).
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &str) -> Result<String, EngineError> {
    fs::read_to_string(path)
        .map_err(|e| EngineError::InvalidInput(format!("cannot read {path}: {e}")))
}

fn parse_point(text: &str) -> Result<Vec<Rat>, EngineError> {
    text.split(',').map(|s| parse_rat(s.trim())).collect()
}

fn parse_weights(text: &str) -> Result<Vec<WeightVec>, EngineError> {
    text.split(';')
        .map(|pair| {
            let coords = pair
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| EngineError::InvalidInput(format!("bad weight `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            WeightVec::new(coords)
        })
        .collect()
}

fn parse_exponents(text: &str) -> Result<Vec<i64>, EngineError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| EngineError::InvalidInput(format!("bad exponent `{s}`")))
        })
        .collect()
}

fn emit<T: serde::Serialize>(json: bool, value: &T, plain: String) -> Result<(), EngineError> {
    if json {
        let text = serde_json::to_string_pretty(value)
            .map_err(|e| EngineError::Internal(e.to_string()))?;
        println!("{text}");
    } else {
        println!("{plain}");
    }
    Ok(())
}

fn verification_failed(what: &str) -> EngineError {
    EngineError::Internal(format!("verification failed: {what}"))
}

fn run(cli: Cli) -> Result<(), EngineError> {
    match cli.command {
        Command::Facets { ideal, out } => {
            let i = parse_ideal(&read(&ideal)?)?;
            let np = NewtonPolyhedron::from_ideal(&i)?;
            let compact: Vec<String> = np
                .compact_facets()
                .iter()
                .map(|f| format!("{}>={}", f.normal, format_rat(&f.offset)))
                .collect();
            emit(out.json, &PolyhedronJson::of(&np), compact.join(" "))
        }
        Command::Closure { ideal, out } => {
            let i = parse_ideal(&read(&ideal)?)?;
            let c = closure_generators(&i)?;
            if out.verify {
                let again = closure_generators(&c)?;
                if again != c {
                    return Err(verification_failed("closure not idempotent"));
                }
                let np = NewtonPolyhedron::from_ideal(&i)?;
                for g in c.gens() {
                    if !np.vrep_member(&g.to_rat_point())? {
                        return Err(verification_failed("closure generator outside NP"));
                    }
                }
            }
            let plain = serde_json::to_string(&IdealJson::of(&c))
                .map_err(|e| EngineError::Internal(e.to_string()))?;
            emit(out.json, &IdealJson::of(&c), plain)
        }
        Command::Member { ideal, point, out } => {
            let i = parse_ideal(&read(&ideal)?)?;
            let p = parse_point(&point)?;
            let np = NewtonPolyhedron::from_ideal(&i)?;
            let by_facets = np.member(&p)?;
            if out.verify {
                let by_vrep = np.vrep_member(&p)?;
                if by_facets != by_vrep {
                    return Err(verification_failed("facet and vertex oracles disagree"));
                }
                // Integer points can also be checked by the power oracle.
                if p.iter().all(|x| x.denom() == &num_bigint::BigInt::from(1) && !x.is_negative()) {
                    let m = ExpVec::new(
                        p.iter().map(|x| x.numer().try_into().unwrap()).collect(),
                    )?;
                    let (by_power, _) = power_oracle_member(&i, &m)?;
                    if by_power != by_facets {
                        return Err(verification_failed("power oracle disagrees"));
                    }
                }
            }
            emit(out.json, &serde_json::json!({ "member": by_facets }), by_facets.to_string())
        }
        Command::Contain { b, q, a, p, out } => {
            let b = parse_ideal(&read(&b)?)?;
            let a = parse_ideal(&read(&a)?)?;
            let cert = contains_closure(&b, q, &a, p)?;
            if out.verify && !cert.verify() {
                return Err(verification_failed("certificate does not re-check"));
            }
            emit(out.json, &CertificateJson::of(&cert), cert.member.to_string())
        }
        Command::Loj { a, b, out } => {
            let spec_a = parse_filtration(&read(&a)?)?;
            let spec_b = parse_filtration(&read(&b)?)?;
            let res = loj_filtration(&spec_a, &spec_b)?;
            if out.verify {
                if let (FiltrationSpec::Power(ia), FiltrationSpec::Power(ib), LojValue::Finite(v)) =
                    (&spec_a, &spec_b, &res.value)
                {
                    for p in 1..=3u32 {
                        let expected: u32 = (v.clone() * rat_int(p as i64))
                            .ceil()
                            .to_integer()
                            .try_into()
                            .map_err(|_| EngineError::Internal("threshold overflow".into()))?;
                        let expected = expected.max(1);
                        let mut q = 1u32;
                        let got = loop {
                            if contains_closure(ib, q, ia, p)?.member {
                                break q;
                            }
                            q += 1;
                            if q > 512 {
                                return Err(verification_failed("no containment below 512"));
                            }
                        };
                        if got != expected {
                            return Err(verification_failed(
                                "containment oracle disagrees with the facet formula",
                            ));
                        }
                    }
                }
            }
            emit(out.json, &LojJson::of(&res), loj_value_string(&res.value))
        }
        Command::Lct { input, out } => {
            let spec = parse_filtration(&read(&input)?)?;
            let value = lct_filtration(&spec)?;
            if out.verify {
                let oracle = lct_diagonal_oracle(&spec)?;
                if oracle != value {
                    return Err(verification_failed("diagonal oracle disagrees"));
                }
            }
            emit(
                out.json,
                &serde_json::json!({ "lct": RatStr(value.clone()) }),
                format_rat(&value),
            )
        }
        Command::Theta { ideal, out } => {
            let i = parse_ideal(&read(&ideal)?)?;
            let report = theta(&i)?;
            emit(out.json, &ThetaJson::of(&report), format_rat(&report.theta))
        }
        Command::Mixed { i, j, n0, teissier, out } => {
            let i = parse_ideal(&read(&i)?)?;
            let j = parse_ideal(&read(&j)?)?;
            if teissier {
                let report = check_teissier(&i, &j)?;
                let plain = report
                    .table
                    .e
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                emit(out.json, &TeissierJson::of(&report), plain)
            } else {
                let table = mixed_multiplicities(&i, &j, n0)?;
                let plain = table
                    .e
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                emit(out.json, &MixedJson::of(&table), plain)
            }
        }
        Command::Milnor { exponents, out } => {
            let exps = parse_exponents(&exponents)?;
            let report = milnor_and_gradient(&exps)?;
            emit(
                out.json,
                &MilnorJson::of(&report),
                format!("{} {}", report.mu, format_rat(&report.gradient_loj)),
            )
        }
        Command::Family { action, file, out } => {
            let spec = parse_family(&read(&file)?)?;
            match action.as_str() {
                "walls" => {
                    let ws = walls(&spec)?;
                    let plain = ws
                        .iter()
                        .map(WallJson::plain)
                        .collect::<Vec<_>>()
                        .join(" ");
                    let json: Vec<WallJson> = ws.iter().map(WallJson::of).collect();
                    emit(out.json, &json, plain)
                }
                "analyze" => {
                    let report = analyze(&spec)?;
                    let plain = format!(
                        "walls: [{}]  chambers: {}  continuous: {}  inv_L_affine: {}",
                        report
                            .walls
                            .iter()
                            .map(WallJson::plain)
                            .collect::<Vec<_>>()
                            .join(", "),
                        report.chambers.len(),
                        report.l_continuous,
                        report.inv_l_affine
                    );
                    emit(out.json, &ChamberReportJson::of(&spec, &report), plain)
                }
                other => Err(EngineError::UnsupportedMode(format!(
                    "family action `{other}` (use walls|analyze)"
                ))),
            }
        }
        Command::Sharpness { weights, out } => {
            let vals = parse_weights(&weights)?;
            let s = sharpness_witness(&vals)?;
            emit(
                out.json,
                &SharpnessJson::of(&s),
                format!("N={} p={} q={}", s.n_param, s.p, s.q),
            )
        }
        Command::InfinityCheck { map, gamma, out } => {
            let f = parse_map(&read(&map)?)?;
            if gamma {
                let np = gamma_infinity(&f)?;
                let plain = np
                    .facets()
                    .iter()
                    .map(|fc| format!("{}>={}", fc.normal, format_rat(&fc.offset)))
                    .collect::<Vec<_>>()
                    .join(" ");
                return emit(out.json, &PolyhedronJson::of(&np), plain);
            }
            let report = nondegenerate_at_infinity(&f)?;
            if out.verify {
                // The polyhedron route must accept the same input.
                let _ = gamma_infinity(&f)?;
            }
            emit(
                out.json,
                &NondegeneracyJson::of(&report),
                if report.nondegenerate {
                    "nondegenerate".to_string()
                } else {
                    "degenerate".to_string()
                },
            )
        }
        Command::InfinityMin { table, labels, out } => {
            let t = parse_table(&read(&table)?)?;
            let value = match &labels {
                Some(ls) => loj_infinity_min_local(&t, ls)?,
                None => loj_infinity_min(&t)?,
            };
            emit(
                out.json,
                &serde_json::json!({ "value": RatStr(value.clone()) }),
                format_rat(&value),
            )
        }
        Command::Selftest { seed } => {
            let results = testkit::run_all(seed);
            let mut failed = 0usize;
            for (name, outcome) in &results {
                match outcome {
                    Ok(()) => println!("{name}: pass"),
                    Err(msg) => {
                        failed += 1;
                        println!("{name}: FAIL ({msg})");
                    }
                }
            }
            if failed > 0 {
                return Err(EngineError::Internal(format!("{failed} suites failed")));
            }
            println!("selftest: all {} suites pass (seed {seed})", results.len());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                EngineError::InvalidInput(_) | EngineError::EmptyGenerators => 2,
                EngineError::UnsupportedDimension(_)
                | EngineError::UnsupportedMode(_)
                | EngineError::PowerCapExceeded { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
