//! Command-line front end. Every command prints either a human-readable
//! text report or, with `--format json`, one machine-readable JSON document
//! on stdout. Output is deterministic: no timestamps, sorted keys, and
//! large integers rendered as decimal strings.
//!
//! Exit codes: 0 success, 1 failed property or violated bound under
//! `--strict`, 2 input error, 3 internal cross-check disagreement.

use crate::arith::{primes_up_to, Valuation};
use crate::lucas::{
    check_lucas_congruences, check_shifted_congruences, survey_lucas_numbers,
    survey_pell_lucas_numbers, LucasParams,
};
use crate::modular::analyze;
use crate::parse::parse_poly;
use crate::poly::IntPolynomial;
use crate::report::CongruenceReport;
use crate::resultant::{resultant, Engine};
use crate::selftest;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

const SURVEY_PRIME_MAX_CAP: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "polyres",
    version,
    about = "Exact polynomial resultants, mod-q root and rank analysis, and Lucas congruence checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit nonzero when an asserted bound or congruence fails.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EngineFlag {
    Sylvester,
    Remainder,
    Euclid,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Lucas,
    PellLucas,
}

#[derive(Subcommand)]
enum Command {
    /// Compute R(f, g) by one engine or all three.
    Resultant {
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t = EngineFlag::All)]
        engine: EngineFlag,
    },
    /// Roots, common roots, remainder-matrix rank, and divisibility bounds mod a prime.
    Analyze {
        f: String,
        g: String,
        #[arg(long)]
        prime: u64,
    },
    /// Lucas-sequence congruences mod prime^2 for parameters (P, Q), optionally shifted by k.
    Lucas {
        /// Sequence parameter P.
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        /// Sequence parameter Q.
        #[arg(long = "q-param", allow_negative_numbers = true)]
        q_param: i64,
        /// The odd prime q; congruences are taken mod q^2.
        #[arg(long)]
        prime: u64,
        /// Optional shift k, replacing (P, Q) by (P + 2k, k^2 + Pk + Q).
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
    },
    /// Sweep a congruence family over every qualifying prime up to a bound.
    Survey {
        #[arg(value_enum)]
        family: Family,
        #[arg(long = "prime-max")]
        prime_max: u64,
    },
    /// Run the built-in property suites.
    Selftest,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Resultant { f, g, engine } => cmd_resultant(cli, f, g, *engine),
        Command::Analyze { f, g, prime } => cmd_analyze(cli, f, g, *prime),
        Command::Lucas {
            p,
            q_param,
            prime,
            k,
        } => cmd_lucas(cli, *p, *q_param, *prime, *k),
        Command::Survey { family, prime_max } => cmd_survey(cli, *family, *prime_max),
        Command::Selftest => Ok(cmd_selftest(cli)),
    }
}

fn parse_input(name: &str, text: &str) -> Result<IntPolynomial, String> {
    parse_poly(text).map_err(|e| format!("{name}: {e}"))
}

fn emit(cli: &Cli, command: &str, inputs: Value, results: Value, text: String) {
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Json => {
            let doc = json!({
                "command": command,
                "inputs": inputs,
                "results": results,
                "version": env!("CARGO_PKG_VERSION"),
            });
            println!("{doc}");
        }
    }
}

fn big_str(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn valuation_json(v: Valuation) -> Value {
    match v {
        Valuation::Finite(e) => json!(e),
        Valuation::Infinite => json!("inf"),
    }
}

fn report_json(r: &CongruenceReport) -> Value {
    json!({
        "label": r.label,
        "subject": r.subject,
        "q": r.q,
        "modulus_power": r.modulus_power,
        "modulus": big_str(&r.modulus),
        "lhs": big_str(&r.lhs),
        "rhs": big_str(&r.rhs),
        "holds": r.holds,
        "preconditions_met": r.preconditions_met,
        "reason": r.reason,
    })
}

fn report_text(r: &CongruenceReport) -> String {
    let status = if !r.preconditions_met {
        format!(
            "not asserted ({})",
            r.reason.as_deref().unwrap_or("preconditions unmet")
        )
    } else if r.holds {
        "holds".to_string()
    } else {
        "VIOLATED".to_string()
    };
    format!(
        "{}: {} = {} (mod {}^{}): {}  [{}]",
        r.label, r.lhs, r.rhs, r.q, r.modulus_power, status, r.subject
    )
}

fn cmd_resultant(cli: &Cli, f_text: &str, g_text: &str, engine: EngineFlag) -> Result<i32, String> {
    let f = parse_input("f", f_text)?;
    let g = parse_input("g", g_text)?;
    let engine_name = match engine {
        EngineFlag::Sylvester => "sylvester",
        EngineFlag::Remainder => "remainder",
        EngineFlag::Euclid => "euclid",
        EngineFlag::All => "all",
    };
    let inputs = json!({
        "f": f.to_string(),
        "g": g.to_string(),
        "engine": engine_name,
    });

    let single = |e: Engine| resultant(&f, &g, e);
    let (results, text, code) = match engine {
        EngineFlag::All => {
            let rs: Vec<_> = Engine::ALL.iter().map(|&e| single(e)).collect();
            let agreement = rs.iter().all(|r| r.value == rs[0].value);
            let values: Value = rs
                .iter()
                .map(|r| (r.engine.name().to_string(), big_str(&r.value)))
                .collect::<serde_json::Map<_, _>>()
                .into();
            let results = json!({
                "value": big_str(&rs[0].value),
                "values": values,
                "agreement": agreement,
                "degenerate": rs[0].degenerate,
            });
            let mut text = format!("f = {f}\ng = {g}\n");
            if agreement {
                text.push_str(&format!(
                    "R(f, g) = {} (engines agree: sylvester, remainder_matrix, euclidean)",
                    rs[0].value
                ));
            } else {
                text.push_str("ENGINE DISAGREEMENT:\n");
                for r in &rs {
                    text.push_str(&format!("  {} -> {}\n", r.engine.name(), r.value));
                }
            }
            if rs[0].degenerate {
                text.push_str("\nnote: a zero polynomial input; resultant defined as 0");
            }
            let code = if agreement { EXIT_OK } else { EXIT_DISAGREEMENT };
            (results, text, code)
        }
        EngineFlag::Sylvester | EngineFlag::Remainder | EngineFlag::Euclid => {
            let e = match engine {
                EngineFlag::Sylvester => Engine::Sylvester,
                EngineFlag::Remainder => Engine::RemainderMatrix,
                EngineFlag::Euclid => Engine::Euclidean,
                EngineFlag::All => unreachable!(),
            };
            let r = single(e);
            let results = json!({
                "value": big_str(&r.value),
                "engine": r.engine.name(),
                "degenerate": r.degenerate,
            });
            let mut text = format!("f = {f}\ng = {g}\nR(f, g) = {} [{}]", r.value, r.engine.name());
            if r.degenerate {
                text.push_str("\nnote: a zero polynomial input; resultant defined as 0");
            }
            (results, text, EXIT_OK)
        }
    };
    emit(cli, "resultant", inputs, results, text);
    Ok(code)
}

fn cmd_analyze(cli: &Cli, f_text: &str, g_text: &str, prime: u64) -> Result<i32, String> {
    let f = parse_input("f", f_text)?;
    let g = parse_input("g", g_text)?;
    let a = analyze(&f, &g, prime).map_err(|e| e.to_string())?;
    let n = a.f.degree().unwrap_or(0);
    let m = a.g.degree().unwrap_or(0);
    let inputs = json!({
        "f": a.f.to_string(),
        "g": a.g.to_string(),
        "q": prime,
    });
    let results = json!({
        "degree_f": n,
        "degree_g": m,
        "roots_f": a.roots_f,
        "roots_g": a.roots_g,
        "common_roots": a.common_roots,
        "ell": a.ell,
        "rank_p": a.rank_p,
        "resultant": big_str(&a.resultant),
        "v_q": valuation_json(a.v_q),
        "bound_root_count": a.bound_root_count,
        "bound_rank": a.bound_rank,
        "ell_vs_rank": a.ell_vs_rank,
    });
    let flag = |b: bool| if b { "ok" } else { "VIOLATED" };
    let text = format!(
        "f = {f}\ng = {g}\nq = {q}\n\
         roots of f mod q: {rf:?}\nroots of g mod q: {rg:?}\ncommon roots: {cr:?} (ell = {ell})\n\
         remainder-matrix rank p = {p} (n = {n})\n\
         R(f, g) = {res}\nv_q(R) = {v}\n\
         bounds: v_q >= ell: {b1}; n - p >= ell: {b2}; v_q >= n - p: {b3}",
        f = a.f,
        g = a.g,
        q = prime,
        rf = a.roots_f,
        rg = a.roots_g,
        cr = a.common_roots,
        ell = a.ell,
        p = a.rank_p,
        n = n,
        res = a.resultant,
        v = a.v_q,
        b1 = flag(a.bound_root_count),
        b2 = flag(a.ell_vs_rank),
        b3 = flag(a.bound_rank),
    );
    emit(cli, "analyze", inputs, results, text);
    if cli.strict && !a.bounds_ok() {
        return Ok(EXIT_FAILED_CHECK);
    }
    Ok(EXIT_OK)
}

fn cmd_lucas(cli: &Cli, p: i64, q_param: i64, prime: u64, k: Option<i64>) -> Result<i32, String> {
    let params = LucasParams::new(p, q_param);
    let reports = match k {
        None => check_lucas_congruences(&params, prime).map_err(|e| e.to_string())?,
        Some(k) => check_shifted_congruences(&params, &BigInt::from(k), prime)
            .map_err(|e| e.to_string())?,
    };
    let reports = [reports.0, reports.1];
    let inputs = json!({
        "p": p,
        "q_param": q_param,
        "prime": prime,
        "k": k,
    });
    let results = json!({
        "discriminant": big_str(&params.discriminant()),
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    let mut text = format!(
        "P = {p}, Q = {q_param}, prime = {prime}, discriminant = {}\n",
        params.discriminant()
    );
    if let Some(k) = k {
        text.push_str(&format!("shift k = {k}\n"));
    }
    for r in &reports {
        text.push_str(&report_text(r));
        text.push('\n');
    }
    text.pop();
    emit(cli, "lucas", inputs, results, text);
    if cli.strict && reports.iter().any(|r| r.is_violation()) {
        return Ok(EXIT_FAILED_CHECK);
    }
    Ok(EXIT_OK)
}

fn cmd_survey(cli: &Cli, family: Family, prime_max: u64) -> Result<i32, String> {
    if prime_max > SURVEY_PRIME_MAX_CAP {
        return Err(format!(
            "prime-max {prime_max} exceeds the cap of {SURVEY_PRIME_MAX_CAP}"
        ));
    }
    let (family_name, residue_modulus): (&str, u64) = match family {
        Family::Lucas => ("lucas", 5),
        Family::PellLucas => ("pell-lucas", 8),
    };
    let primes: Vec<u64> = primes_up_to(prime_max)
        .into_iter()
        .filter(|&q| {
            q > 2 && (q % residue_modulus == 1 || q % residue_modulus == residue_modulus - 1)
        })
        .collect();

    let surveyed = crate::par::map_slice(&primes, |&q| match family {
        Family::Lucas => survey_lucas_numbers(q).expect("qualifying prime"),
        Family::PellLucas => survey_pell_lucas_numbers(q).expect("qualifying prime"),
    });

    let mut per_prime = Vec::new();
    let mut total_checks = 0usize;
    let mut violations: Vec<&CongruenceReport> = Vec::new();
    for (q, reports) in primes.iter().zip(&surveyed) {
        let bad: Vec<&CongruenceReport> = reports.iter().filter(|r| r.is_violation()).collect();
        per_prime.push(json!({
            "prime": q,
            "checks": reports.len(),
            "violations": bad.len(),
        }));
        total_checks += reports.len();
        violations.extend(bad);
    }

    let inputs = json!({
        "family": family_name,
        "prime_max": prime_max,
    });
    let results = json!({
        "primes": primes,
        "per_prime": per_prime,
        "total_checks": total_checks,
        "total_violations": violations.len(),
        "violations": violations.iter().map(|r| report_json(r)).collect::<Vec<_>>(),
    });

    let mut text = format!(
        "family = {family_name}, primes up to {prime_max} with q = +/-1 mod {residue_modulus}: {:?}\n",
        primes
    );
    for (q, reports) in primes.iter().zip(&surveyed) {
        let bad = reports.iter().filter(|r| r.is_violation()).count();
        text.push_str(&format!("q = {q}: {} checks, {bad} violations\n", reports.len()));
    }
    text.push_str(&format!(
        "total: {total_checks} checks, {} violations",
        violations.len()
    ));
    let violation_count = violations.len();
    emit(cli, "survey", inputs, results, text);
    if cli.strict && violation_count > 0 {
        return Ok(EXIT_FAILED_CHECK);
    }
    Ok(EXIT_OK)
}

fn cmd_selftest(cli: &Cli) -> i32 {
    let results = selftest::run_all();
    let all = selftest::all_passed(&results);
    let inputs = json!({});
    let json_results = json!({
        "all_passed": all,
        "suites": results
            .iter()
            .map(|s| {
                json!({
                    "name": s.name,
                    "cases": s.cases,
                    "passed": s.passed(),
                    "failure": s.failure,
                })
            })
            .collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for s in &results {
        match &s.failure {
            None => text.push_str(&format!("{:<32} PASS ({} cases)\n", s.name, s.cases)),
            Some(msg) => text.push_str(&format!("{:<32} FAIL: {msg}\n", s.name)),
        }
    }
    text.push_str(if all { "all suites passed" } else { "FAILURES present" });
    emit(cli, "selftest", inputs, json_results, text);
    if all {
        EXIT_OK
    } else {
        EXIT_FAILED_CHECK
    }
}
