//! Acceptance suite: every exit criterion of the project, one test per
//! criterion, each printing a single pass/fail line (run with
//! `cargo test --test acceptance -- --nocapture` to see them all).
//!
//! All arithmetic is exact, so every tolerance is zero; the only stated
//! budgets are wall-clock bounds on the heavy sweeps.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polyres::arith::{primes_up_to, residue, valuation, Valuation};
use polyres::lucas::{
    check_lucas_congruences, check_shifted_congruences, legendre, lucas_v_exact,
    resultant_lucas_identity, survey_lucas_numbers, survey_pell_lucas_numbers, LucasParams,
};
use polyres::modular::{check_all_roots_bound, check_residue_split_bounds, remainder_matrix};
use polyres::parse::parse_poly;
use polyres::poly::IntPolynomial;
use polyres::resultant::{
    cyclotomic_resultant, resultant_euclidean, resultant_remainder_matrix, resultant_sylvester,
};
use polyres::sweeps::valuation_bound_sweep;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn p(text: &str) -> IntPolynomial {
    parse_poly(text).expect("fixture parses")
}

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, span: i64) -> IntPolynomial {
    loop {
        let deg = rng.random_range(0..=max_deg);
        let poly = IntPolynomial::from_coeffs(
            (0..=deg)
                .map(|_| rng.random_range(-span..=span))
                .collect::<Vec<_>>(),
        );
        if !poly.is_zero() {
            return poly;
        }
    }
}

#[test]
fn criterion_01_worked_example_exactness() {
    let start = Instant::now();
    let f = p("x^6+1");
    let g = p("(x+1)^6+1");
    let expected = BigInt::from(175760);
    assert_eq!(expected, BigInt::from(2).pow(4) * 5 * BigInt::from(13).pow(3));
    let values = [
        resultant_sylvester(&f, &g),
        resultant_remainder_matrix(&f, &g),
        resultant_euclidean(&f, &g),
    ];
    let elapsed = start.elapsed();
    let pass = values.iter().all(|v| *v == expected) && elapsed.as_secs_f64() < 1.0;
    report(
        "1",
        pass,
        &format!(
            "R(x^6+1, (x+1)^6+1) = 175760 = 2^4*5*13^3 from all three engines in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_02_matrix_fixtures() {
    let f = p("x^6+1");
    let g = p("(x+1)^6+1");
    let rm = remainder_matrix(&f, &g).expect("degree 6, monic");
    let expected_rows: [[i64; 6]; 6] = [
        [1, -6, -15, -20, -15, -6],
        [6, 1, -6, -15, -20, -15],
        [15, 6, 1, -6, -15, -20],
        [20, 15, 6, 1, -6, -15],
        [15, 20, 15, 6, 1, -6],
        [6, 15, 20, 15, 6, 1],
    ];
    let mut pass = rm.denom.is_one();
    for i in 0..6 {
        for j in 0..6 {
            pass &= rm.matrix.get(i, j) == &BigInt::from(expected_rows[i][j]);
        }
    }
    let reduced = rm.matrix.reduce_mod(13).expect("13 is prime");
    pass &= reduced.rank() == 3;
    let rref = reduced.rref();
    let expected_rref: [[u64; 6]; 6] = [
        [1, 0, 0, 7, 4, 8],
        [0, 1, 0, 4, 0, 3],
        [0, 0, 1, 8, 3, 11],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ];
    for (i, row) in expected_rref.iter().enumerate() {
        pass &= rref.row(i) == row.as_slice();
    }
    report(
        "2",
        pass,
        "remainder matrix and its mod-13 reduced row echelon form match entry-for-entry; rank 3",
    );
}

#[test]
fn criterion_03_and_04_exhaustive_family() {
    let start = Instant::now();
    let mut pairs = 0u64;
    let mut root_count = Vec::new();
    let mut rank_vs_ell = Vec::new();
    let mut val_vs_rank = Vec::new();
    for q in [3u64, 5, 7, 13] {
        let sweep = valuation_bound_sweep(q, 3);
        pairs += sweep.ordered_pairs;
        root_count.extend(sweep.root_count_violations);
        rank_vs_ell.extend(sweep.rank_vs_ell_violations);
        val_vs_rank.extend(sweep.valuation_vs_rank_violations);
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed.as_secs_f64() < 120.0;
    report(
        "3",
        root_count.is_empty() && in_budget,
        &format!(
            "v_q(R) >= ell on all {pairs} monic pairs (deg <= 3, q in {{3,5,7,13}}), \
             {} violations, {elapsed:?} (< 2 min)",
            root_count.len()
        ),
    );
    report(
        "4a",
        rank_vs_ell.is_empty() && val_vs_rank.is_empty(),
        &format!(
            "n - p >= ell and v_q(R) >= n - p on the same family, {} + {} violations",
            rank_vs_ell.len(),
            val_vs_rank.len()
        ),
    );
}

#[test]
fn criterion_04_minor_valuations() {
    let f = p("x^6+1");
    let g = p("(x+1)^6+1");
    let a = remainder_matrix(&f, &g).expect("monic").matrix;
    let v4 = a.minor_valuations(13, 4).expect("within cap");
    let v5 = a.minor_valuations(13, 5).expect("within cap");
    let v6 = a.minor_valuations(13, 6).expect("within cap");
    let pass = v4.at_least(1) && v5.at_least(2) && v6.at_least(3);
    report(
        "4b",
        pass,
        &format!(
            "brute-force minors of the worked matrix mod 13: min v(4x4) = {v4} >= 1, \
             min v(5x5) = {v5} >= 2, v(6x6) = {v6} >= 3"
        ),
    );
}

#[test]
fn criterion_05_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let count = 500usize;
    let mut failures: Vec<String> = Vec::new();

    // (i) product formula on fully split f: R(f, g) = lc^m * prod g(r_i)
    for _ in 0..count {
        let lc = loop {
            let c = rng.random_range(-9i64..=9);
            if c != 0 {
                break c;
            }
        };
        let deg = rng.random_range(1..=6usize);
        let roots: Vec<i64> = (0..deg).map(|_| rng.random_range(-4i64..=4)).collect();
        let mut f = IntPolynomial::constant(lc);
        for &r in &roots {
            f = &f * &IntPolynomial::from_coeffs(vec![-r, 1]);
        }
        let g = random_poly(&mut rng, 6, 9);
        let m = g.degree().unwrap() as u32;
        let expected = roots
            .iter()
            .fold(BigInt::from(lc).pow(m), |acc, &r| acc * g.eval(&BigInt::from(r)));
        if resultant_sylvester(&f, &g) != expected {
            failures.push(format!("(i) product formula: f={f}, g={g}"));
        }
    }

    // (ii) planted common root forces R = 0 in every engine
    for _ in 0..count {
        let r = rng.random_range(-9i64..=9);
        let root = IntPolynomial::from_coeffs(vec![-r, 1]);
        let f = &root * &random_poly(&mut rng, 5, 9);
        let g = &root * &random_poly(&mut rng, 5, 9);
        if !resultant_sylvester(&f, &g).is_zero()
            || !resultant_remainder_matrix(&f, &g).is_zero()
            || !resultant_euclidean(&f, &g).is_zero()
        {
            failures.push(format!("(ii) planted root {r}: f={f}, g={g}"));
        }
    }

    // (iii) R(f, g) = (-1)^(nm) R(g, f)
    for _ in 0..count {
        let f = random_poly(&mut rng, 6, 9);
        let g = random_poly(&mut rng, 6, 9);
        let (n, m) = (f.degree().unwrap(), g.degree().unwrap());
        let lhs = resultant_sylvester(&f, &g);
        let rhs = resultant_sylvester(&g, &f);
        let rhs = if n * m % 2 == 1 { -rhs } else { rhs };
        if lhs != rhs {
            failures.push(format!("(iii) swap rule: f={f}, g={g}"));
        }
    }

    // (iv) R(fh, g) = R(f, g) R(h, g), and symmetrically in the second slot
    for _ in 0..count {
        let f = random_poly(&mut rng, 6, 9);
        let h = random_poly(&mut rng, 6, 9);
        let g = random_poly(&mut rng, 6, 9);
        let left = resultant_sylvester(&(&f * &h), &g);
        let right = resultant_sylvester(&f, &g) * resultant_sylvester(&h, &g);
        if left != right {
            failures.push(format!("(iv) first slot: f={f}, h={h}, g={g}"));
        }
        let left2 = resultant_sylvester(&f, &(&g * &h));
        let right2 = resultant_sylvester(&f, &g) * resultant_sylvester(&f, &h);
        if left2 != right2 {
            failures.push(format!("(iv) second slot: f={f}, h={h}, g={g}"));
        }
    }

    // (v) R(f, vf + h) = a_n^(m - d) R(f, h)
    let mut done = 0;
    while done < count {
        let f = random_poly(&mut rng, 6, 9);
        let n = f.degree().unwrap();
        if n == 0 {
            continue;
        }
        let v = random_poly(&mut rng, 3, 9);
        let h = random_poly(&mut rng, n - 1, 9);
        let g = &(&v * &f) + &h;
        let m = g.degree().unwrap();
        let d = h.degree().unwrap();
        let lhs = resultant_sylvester(&f, &g);
        let rhs = f.leading_coeff().unwrap().pow((m - d) as u32) * resultant_sylvester(&f, &h);
        if lhs != rhs {
            failures.push(format!("(v) reduction: f={f}, v={v}, h={h}"));
        }
        done += 1;
    }

    // (vi) R(f(x^p), g(x^p)) = R(f, g)^p for p in {2, 3}
    for _ in 0..count {
        let f = random_poly(&mut rng, 6, 9);
        let g = random_poly(&mut rng, 6, 9);
        let base = resultant_sylvester(&f, &g);
        for pexp in [2usize, 3] {
            let lhs = resultant_sylvester(&f.substitute_power(pexp), &g.substitute_power(pexp));
            if lhs != base.pow(pexp as u32) {
                failures.push(format!("(vi) p={pexp}: f={f}, g={g}"));
            }
        }
    }

    report(
        "5",
        failures.is_empty(),
        &format!(
            "resultant properties (i)-(vi), {count} randomized instances each \
             (deg <= 6, coefficients in [-9, 9]): {} failures{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_06_root_bounds_all_small_primes() {
    let primes: Vec<u64> = primes_up_to(101).into_iter().filter(|&q| q > 2).collect();
    let failures: Vec<String> = polyres::par::map_slice(&primes, |&q| {
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + q);
        let mut local = Vec::new();
        for _ in 0..100 {
            let f = loop {
                let f = random_poly(&mut rng, 4, 9);
                if residue(&f.coeff(0), q) != 0 {
                    break f;
                }
            };
            match check_all_roots_bound(&f, q) {
                Ok(r) if !r.is_violation() => {}
                other => local.push(format!("root-count bound at q={q}, f={f}: {other:?}")),
            }
            match check_residue_split_bounds(&f, q) {
                Ok((minus, plus)) => {
                    if minus.is_violation() || plus.is_violation() {
                        local.push(format!("residue-split bound at q={q}, f={f}"));
                    }
                }
                Err(e) => local.push(format!("residue-split error at q={q}, f={f}: {e}")),
            }
            // product consistency: R- * R+ = R(f, x^(q-1) - 1)
            let half = (q - 1) / 2;
            let prod = cyclotomic_resultant(&f, half, -1) * cyclotomic_resultant(&f, half, 1);
            if prod != cyclotomic_resultant(&f, q - 1, -1) {
                local.push(format!("product consistency at q={q}, f={f}"));
            }
        }
        local
    })
    .into_iter()
    .flatten()
    .collect();
    report(
        "6",
        failures.is_empty(),
        &format!(
            "root-count and residue-split bounds plus R- * R+ product consistency for all odd \
             primes q <= 101, 100 random polynomials each: {} failures",
            failures.len()
        ),
    );
}

#[test]
fn criterion_07_lucas_congruence_sweep() {
    let start = Instant::now();
    let primes: Vec<u64> = primes_up_to(500).into_iter().filter(|&q| q > 2).collect();
    let failures: Vec<String> = polyres::par::map_slice(&primes, |&q| {
        let mut rng = ChaCha8Rng::seed_from_u64(7000 + q);
        let mut local = Vec::new();
        let mut found = 0;
        while found < 50 {
            let params =
                LucasParams::new(rng.random_range(-99i64..=99), rng.random_range(-99i64..=99));
            if residue(&params.q, q) == 0 || legendre(&params.discriminant(), q) != 1 {
                continue;
            }
            found += 1;
            match check_lucas_congruences(&params, q) {
                Ok((full, half)) => {
                    if full.is_violation() || half.is_violation() {
                        local.push(format!("congruence at q={q}, {params:?}"));
                    }
                }
                Err(e) => local.push(format!("error at q={q}: {e}")),
            }
            for _ in 0..10 {
                let k = BigInt::from(rng.random_range(-99i64..=99));
                let shifted_q = &k * &k + &params.p * &k + &params.q;
                if residue(&shifted_q, q) == 0 {
                    continue; // hypothesis of the shifted form fails; skip
                }
                match check_shifted_congruences(&params, &k, q) {
                    Ok((full, half)) => {
                        if full.is_violation() || half.is_violation() {
                            local.push(format!("shifted congruence at q={q}, k={k}, {params:?}"));
                        }
                    }
                    Err(e) => local.push(format!("shift error at q={q}: {e}")),
                }
            }
        }
        local
    })
    .into_iter()
    .flatten()
    .collect();
    let elapsed = start.elapsed();
    report(
        "7",
        failures.is_empty() && elapsed.as_secs_f64() < 60.0,
        &format!(
            "V_(q-1) and V_((q-1)/2)^2 congruences mod q^2 for all odd primes q <= 500, 50 \
             qualifying (P, Q) each, plus 10 random shifts per case: {} failures, {elapsed:?} (< 1 min)",
            failures.len()
        ),
    );
}

#[test]
fn criterion_08_sequence_surveys() {
    let lucas_primes: Vec<u64> = primes_up_to(999)
        .into_iter()
        .filter(|&q| q > 2 && (q % 5 == 1 || q % 5 == 4))
        .collect();
    let pell_primes: Vec<u64> = primes_up_to(999)
        .into_iter()
        .filter(|&q| q > 2 && (q % 8 == 1 || q % 8 == 7))
        .collect();
    let lucas_violations: usize = polyres::par::map_slice(&lucas_primes, |&q| {
        survey_lucas_numbers(q)
            .expect("qualifying prime")
            .iter()
            .filter(|r| r.is_violation())
            .count()
    })
    .into_iter()
    .sum();
    let pell_violations: usize = polyres::par::map_slice(&pell_primes, |&q| {
        survey_pell_lucas_numbers(q)
            .expect("qualifying prime")
            .iter()
            .filter(|r| r.is_violation())
            .count()
    })
    .into_iter()
    .sum();

    // spot values straight from the recurrence
    let l10 = lucas_v_exact(10, &LucasParams::lucas()).unwrap();
    let p6 = lucas_v_exact(6, &LucasParams::pell_lucas()).unwrap();
    let spots = l10 == BigInt::from(123)
        && residue(&l10, 121) == 2
        && p6 == BigInt::from(198)
        && residue(&p6, 49) == 2;

    report(
        "8",
        lucas_violations == 0 && pell_violations == 0 && spots,
        &format!(
            "Lucas survey over {} primes (q = +/-1 mod 5) and Pell-Lucas over {} primes \
             (q = +/-1 mod 8) below 1000: {} violations; spot checks L_10 = 123 = 2 mod 121, \
             Pell-Lucas_6 = 198 = 2 mod 49",
            lucas_primes.len(),
            pell_primes.len(),
            lucas_violations + pell_violations
        ),
    );
}

#[test]
fn criterion_09_bridge_identity() {
    let primes: Vec<u64> = primes_up_to(101).into_iter().filter(|&q| q > 2).collect();
    let failures: Vec<String> = polyres::par::map_slice(&primes, |&q| {
        let mut rng = ChaCha8Rng::seed_from_u64(9000 + q);
        let mut local = Vec::new();
        for _ in 0..20 {
            let params =
                LucasParams::new(rng.random_range(-99i64..=99), rng.random_range(-99i64..=99));
            match resultant_lucas_identity(&params, q) {
                Ok(bridge) if bridge.matches => {
                    // consistency with the divisibility bound: a qualifying
                    // pair makes q^2 divide the resultant
                    if residue(&params.q, q) != 0
                        && legendre(&params.discriminant(), q) == 1
                        && !valuation(&bridge.resultant, q).at_least(2)
                    {
                        local.push(format!("v_{q}(R) < 2 for qualifying {params:?}"));
                    }
                }
                other => local.push(format!("bridge at q={q}, {params:?}: {other:?}")),
            }
        }
        local
    })
    .into_iter()
    .flatten()
    .collect();
    report(
        "9",
        failures.is_empty(),
        &format!(
            "R(x^2 - Px + Q, x^(q-1) - 1) = 1 + Q^(q-1) - V_(q-1)(P, Q) exactly for all odd \
             primes q <= 101, 20 random (P, Q) each: {} failures",
            failures.len()
        ),
    );
}

#[test]
fn criterion_10_json_determinism() {
    let exe = env!("CARGO_BIN_EXE_polyres");
    let run = || {
        let out = std::process::Command::new(exe)
            .args([
                "analyze",
                "x^6+1",
                "(x+1)^6+1",
                "--prime",
                "13",
                "--format",
                "json",
            ])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "analyze exited nonzero");
        out.stdout
    };
    let first = run();
    let pass = (0..2).all(|_| run() == first) && !first.is_empty();
    report(
        "10",
        pass,
        "analyze --format json output is byte-identical across 3 runs",
    );
}

#[test]
fn valuation_sentinel_consistency() {
    // the infinite valuation of a zero resultant satisfies every bound
    assert_eq!(valuation(&BigInt::zero(), 13), Valuation::Infinite);
    assert!(Valuation::Infinite.at_least(u32::MAX));
}
