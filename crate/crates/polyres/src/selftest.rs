//! Runtime property suites behind the `selftest` command: the algebraic
//! identities of the engines, the exhaustive valuation-bound family, the
//! Lucas congruence sweeps, and the worked mod-13 fixtures, all seeded so
//! every run checks the same cases.

use crate::arith::{primes_up_to, valuation, Valuation};
use crate::lucas::{
    check_lucas_congruences, check_shifted_congruences, lucas_v_exact, lucas_v_mod, legendre,
    resultant_lucas_identity, survey_lucas_numbers, survey_pell_lucas_numbers, LucasParams,
};
use crate::matrix::IntMatrix;
use crate::modular::{
    analyze, check_all_roots_bound, check_residue_split_bounds, common_roots,
    remainder_determinant_identity, remainder_matrix,
};
use crate::parse::parse_poly;
use crate::poly::IntPolynomial;
use crate::resultant::{
    cyclotomic_resultant, resultant_euclidean, resultant_remainder_matrix, resultant_sylvester,
};
use crate::sweeps::{monic_family, valuation_bound_sweep};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn all_passed(results: &[SuiteResult]) -> bool {
    results.iter().all(SuiteResult::passed)
}

/// Runs every suite and reports per-suite outcomes.
pub fn run_all() -> Vec<SuiteResult> {
    let suites: Vec<(&'static str, fn() -> Result<usize, String>)> = vec![
        ("parser_round_trip", parser_round_trip),
        ("ring_axioms", ring_axioms),
        ("division_round_trip", division_round_trip),
        ("power_substitution", power_substitution),
        ("eval_mod_vs_exact", eval_mod_vs_exact),
        ("determinant_vs_cofactor", determinant_vs_cofactor),
        ("determinant_mod_consistency", determinant_mod_consistency),
        ("triangularize_postconditions", triangularize_postconditions),
        ("rank_vs_rref", rank_vs_rref),
        ("minor_valuation_vs_det", minor_valuation_vs_det),
        ("engine_cross_agreement", engine_cross_agreement),
        ("planted_common_roots", planted_common_roots),
        ("swap_sign_rule", swap_sign_rule),
        ("multiplicativity", multiplicativity),
        ("euclidean_reduction_rule", euclidean_reduction_rule),
        ("power_substitution_resultant", power_substitution_resultant),
        ("cyclotomic_vs_sylvester", cyclotomic_vs_sylvester),
        ("remainder_determinant", remainder_determinant),
        ("worked_example_fixtures", worked_example_fixtures),
        ("valuation_bound_family", valuation_bound_family),
        ("triangular_zero_rows", triangular_zero_rows),
        ("residue_split_product", residue_split_product),
        ("root_bound_checks", root_bound_checks),
        ("lucas_mod_vs_exact", lucas_mod_vs_exact),
        ("lucas_doubling", lucas_doubling),
        ("lucas_congruence_sweep", lucas_congruence_sweep),
        ("lucas_number_surveys", lucas_number_surveys),
        ("bridge_identity", bridge_identity),
        ("discriminant_shift", discriminant_shift),
    ];
    suites
        .into_iter()
        .map(|(name, run)| match run() {
            Ok(cases) => SuiteResult {
                name,
                cases,
                failure: None,
            },
            Err(failure) => SuiteResult {
                name,
                cases: 0,
                failure: Some(failure),
            },
        })
        .collect()
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, span: i64) -> IntPolynomial {
    let deg = rng.random_range(0..=max_deg);
    IntPolynomial::from_coeffs(
        (0..=deg)
            .map(|_| rng.random_range(-span..=span))
            .collect::<Vec<_>>(),
    )
}

fn random_nonzero_poly(rng: &mut ChaCha8Rng, max_deg: usize, span: i64) -> IntPolynomial {
    loop {
        let p = random_poly(rng, max_deg, span);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_monic_poly(rng: &mut ChaCha8Rng, deg: usize, span: i64) -> IntPolynomial {
    let mut coeffs: Vec<BigInt> = (0..deg)
        .map(|_| BigInt::from(rng.random_range(-span..=span)))
        .collect();
    coeffs.push(BigInt::one());
    IntPolynomial::from_coeffs(coeffs)
}

/// Shrinks a failing polynomial pair by truncating and zeroing coefficients
/// while the failure persists, so reports show a small witness.
fn shrink_pair<F>(mut f: IntPolynomial, mut g: IntPolynomial, fails: F) -> (IntPolynomial, IntPolynomial)
where
    F: Fn(&IntPolynomial, &IntPolynomial) -> bool,
{
    let mut changed = true;
    while changed {
        changed = false;
        for target in 0..2 {
            let cur = if target == 0 { f.clone() } else { g.clone() };
            let deg = match cur.degree() {
                Some(d) => d,
                None => continue,
            };
            let mut candidates: Vec<IntPolynomial> = Vec::new();
            if deg > 0 {
                candidates.push(IntPolynomial::from_coeffs(cur.coeffs()[..deg].to_vec()));
            }
            for i in 0..=deg {
                if !cur.coeff(i).is_zero() {
                    let mut coeffs = cur.coeffs().to_vec();
                    coeffs[i] = BigInt::zero();
                    candidates.push(IntPolynomial::from_coeffs(coeffs));
                }
            }
            for cand in candidates {
                if cand.is_zero() {
                    continue;
                }
                let (cf, cg) = if target == 0 {
                    (cand.clone(), g.clone())
                } else {
                    (f.clone(), cand.clone())
                };
                if fails(&cf, &cg) {
                    f = cf;
                    g = cg;
                    changed = true;
                    break;
                }
            }
        }
    }
    (f, g)
}

fn fail_pair<F>(
    what: &str,
    f: &IntPolynomial,
    g: &IntPolynomial,
    fails: F,
) -> Result<usize, String>
where
    F: Fn(&IntPolynomial, &IntPolynomial) -> bool,
{
    let (sf, sg) = shrink_pair(f.clone(), g.clone(), fails);
    Err(format!("{what}; minimized witness f = {sf}, g = {sg}"))
}

fn parser_round_trip() -> Result<usize, String> {
    let mut rng = rng_for(101);
    let mut cases = 0;
    for _ in 0..300 {
        let f = random_poly(&mut rng, 7, 99);
        let text = f.to_string();
        let back = parse_poly(&text).map_err(|e| format!("reparse of `{text}` failed: {e}"))?;
        if back != f {
            return Err(format!("round trip changed `{text}` into `{back}`"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn ring_axioms() -> Result<usize, String> {
    let mut rng = rng_for(102);
    let mut cases = 0;
    for _ in 0..200 {
        let a = random_poly(&mut rng, 4, 9);
        let b = random_poly(&mut rng, 4, 9);
        let c = random_poly(&mut rng, 4, 9);
        if &a + &b != &b + &a {
            return Err(format!("addition not commutative for {a}, {b}"));
        }
        if &a * &b != &b * &a {
            return Err(format!("multiplication not commutative for {a}, {b}"));
        }
        if &(&a + &b) + &c != &a + &(&b + &c) {
            return Err(format!("addition not associative for {a}, {b}, {c}"));
        }
        if &(&a * &b) * &c != &a * &(&b * &c) {
            return Err(format!("multiplication not associative for {a}, {b}, {c}"));
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            return Err(format!("distributivity fails for {a}, {b}, {c}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn division_round_trip() -> Result<usize, String> {
    let mut rng = rng_for(103);
    let mut cases = 0;
    for _ in 0..200 {
        let num = random_poly(&mut rng, 6, 9).to_rational();
        let den = random_nonzero_poly(&mut rng, 4, 9).to_rational();
        let (q, r) = num.div_rem(&den);
        if &(&q * &den) + &r != num {
            return Err(format!("q*den + r != num for den = {:?}", den.coeffs()));
        }
        if let (Some(rd), Some(dd)) = (r.degree(), den.degree()) {
            if rd >= dd {
                return Err("remainder degree not reduced".into());
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn power_substitution() -> Result<usize, String> {
    let mut rng = rng_for(104);
    let mut cases = 0;
    for _ in 0..200 {
        let f = random_poly(&mut rng, 5, 9);
        let p = rng.random_range(1..=4usize);
        let t = BigInt::from(rng.random_range(-9i64..=9));
        let lhs = f.substitute_power(p).eval(&t);
        let rhs = f.eval(&t.pow(p as u32));
        if lhs != rhs {
            return Err(format!("f(x^{p}) at {t} disagrees for f = {f}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn eval_mod_vs_exact() -> Result<usize, String> {
    let mut rng = rng_for(105);
    let mut cases = 0;
    for _ in 0..200 {
        let f = random_poly(&mut rng, 6, 999);
        let x0 = rng.random_range(-1000i64..=1000);
        let m = rng.random_range(2u64..=100_000);
        let exact = f.eval(&BigInt::from(x0));
        if f.eval_mod(x0, m) != crate::arith::residue(&exact, m) {
            return Err(format!("eval_mod disagrees at x0 = {x0}, m = {m}, f = {f}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn det_cofactor(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let minor = IntMatrix::from_rows((1..n).map(|i| {
            (0..n)
                .filter(|&c| c != j)
                .map(|c| m.get(i, c).clone())
                .collect::<Vec<_>>()
        }));
        let cof = m.get(0, j) * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += cof;
        } else {
            acc -= cof;
        }
    }
    acc
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, span: i64) -> IntMatrix {
    IntMatrix::from_rows(
        (0..n).map(|_| (0..n).map(|_| rng.random_range(-span..=span)).collect::<Vec<_>>()),
    )
}

fn determinant_vs_cofactor() -> Result<usize, String> {
    let mut rng = rng_for(106);
    let mut cases = 0;
    for _ in 0..80 {
        let n = rng.random_range(1..=5);
        let m = random_matrix(&mut rng, n, 50);
        let fast = m.det_exact().map_err(|e| e.to_string())?;
        let slow = det_cofactor(&m);
        if fast != slow {
            return Err(format!("det mismatch {fast} vs cofactor {slow} on {n}x{n}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn determinant_mod_consistency() -> Result<usize, String> {
    let mut rng = rng_for(107);
    let primes = [2u64, 3, 5, 7, 13];
    let mut cases = 0;
    for _ in 0..80 {
        let q = primes[rng.random_range(0..primes.len())];
        let n = rng.random_range(1..=4);
        let m = random_matrix(&mut rng, n, 30);
        let exact = m.det_exact().map_err(|e| e.to_string())?;
        let modular = m
            .reduce_mod(q)
            .and_then(|mm| mm.det())
            .map_err(|e| e.to_string())?;
        if crate::arith::residue(&exact, q) != modular {
            return Err(format!("det mod {q} disagrees on a {n}x{n} matrix"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn triangularize_postconditions() -> Result<usize, String> {
    let mut rng = rng_for(108);
    let primes = [2u64, 3, 5, 7, 13];
    let mut cases = 0;
    for _ in 0..80 {
        let q = primes[rng.random_range(0..primes.len())];
        let n = rng.random_range(1..=5);
        let m = random_matrix(&mut rng, n, 9);
        let (t, sign) = m.triangularize_det_preserving(q).map_err(|e| e.to_string())?;
        let det_m = m.det_exact().map_err(|e| e.to_string())?;
        let det_t = t.det_exact().map_err(|e| e.to_string())?;
        if BigInt::from(sign) * det_t != det_m {
            return Err(format!("determinant not preserved for q = {q}, n = {n}"));
        }
        let image = t.reduce_mod(q).map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in 0..i {
                if image.get(i, j) != 0 {
                    return Err(format!("mod-{q} image not upper triangular at ({i},{j})"));
                }
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn rank_vs_rref() -> Result<usize, String> {
    let mut rng = rng_for(109);
    let primes = [2u64, 3, 5, 7, 13];
    let mut cases = 0;
    for _ in 0..80 {
        let q = primes[rng.random_range(0..primes.len())];
        let rows = rng.random_range(1..=5);
        let cols = rng.random_range(1..=5);
        let m = crate::matrix::ModMatrix::new(
            q,
            rows,
            cols,
            (0..rows * cols).map(|_| rng.random_range(0..q)).collect(),
        )
        .map_err(|e| e.to_string())?;
        let rref = m.rref();
        let nonzero = (0..rows).filter(|&i| !rref.is_row_zero(i)).count();
        if m.rank() != nonzero {
            return Err(format!("rank != nonzero rref rows for a {rows}x{cols} mod {q}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn minor_valuation_vs_det() -> Result<usize, String> {
    let mut rng = rng_for(110);
    let mut cases = 0;
    for _ in 0..40 {
        let n = rng.random_range(1..=4);
        let m = random_matrix(&mut rng, n, 9);
        let q = [3u64, 5, 7][rng.random_range(0..3)];
        let via_minors = m.minor_valuations(q, n).map_err(|e| e.to_string())?;
        let via_det = valuation(&m.det_exact().map_err(|e| e.to_string())?, q);
        if via_minors != via_det {
            return Err(format!("full-size minor valuation {via_minors} != det valuation {via_det}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn engine_cross_agreement() -> Result<usize, String> {
    let mut rng = rng_for(111);
    let mut cases = 0;
    for _ in 0..500 {
        let f = random_nonzero_poly(&mut rng, 6, 9);
        let g = random_nonzero_poly(&mut rng, 6, 9);
        let disagree = |f: &IntPolynomial, g: &IntPolynomial| {
            let s = resultant_sylvester(f, g);
            s != resultant_remainder_matrix(f, g) || s != resultant_euclidean(f, g)
        };
        if disagree(&f, &g) {
            return fail_pair("engines disagree", &f, &g, disagree);
        }
        cases += 1;
    }
    Ok(cases)
}

fn planted_common_roots() -> Result<usize, String> {
    let mut rng = rng_for(112);
    let mut cases = 0;
    for _ in 0..100 {
        let r = rng.random_range(-9i64..=9);
        let root = IntPolynomial::from_coeffs(vec![-r, 1]); // x - r
        let f = &root * &random_nonzero_poly(&mut rng, 4, 9);
        let g = &root * &random_nonzero_poly(&mut rng, 4, 9);
        for (name, value) in [
            ("sylvester", resultant_sylvester(&f, &g)),
            ("remainder_matrix", resultant_remainder_matrix(&f, &g)),
            ("euclidean", resultant_euclidean(&f, &g)),
        ] {
            if !value.is_zero() {
                return Err(format!(
                    "{name} missed the planted root {r}: R = {value} for f = {f}, g = {g}"
                ));
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn swap_sign_rule() -> Result<usize, String> {
    let mut rng = rng_for(113);
    let mut cases = 0;
    for _ in 0..200 {
        let f = random_nonzero_poly(&mut rng, 6, 9);
        let g = random_nonzero_poly(&mut rng, 6, 9);
        let breaks = |f: &IntPolynomial, g: &IntPolynomial| {
            let (n, m) = (f.degree().unwrap(), g.degree().unwrap());
            let lhs = resultant_sylvester(f, g);
            let rhs = resultant_sylvester(g, f);
            lhs != if n * m % 2 == 1 { -rhs } else { rhs }
        };
        if breaks(&f, &g) {
            return fail_pair("swap rule fails", &f, &g, breaks);
        }
        cases += 1;
    }
    Ok(cases)
}

fn multiplicativity() -> Result<usize, String> {
    let mut rng = rng_for(114);
    let mut cases = 0;
    for _ in 0..150 {
        let f = random_nonzero_poly(&mut rng, 4, 9);
        let h = random_nonzero_poly(&mut rng, 4, 9);
        let g = random_nonzero_poly(&mut rng, 4, 9);
        let fh = &f * &h;
        if resultant_sylvester(&fh, &g) != resultant_sylvester(&f, &g) * resultant_sylvester(&h, &g)
        {
            return Err(format!("R(fh, g) != R(f,g) R(h,g) for f={f}, h={h}, g={g}"));
        }
        let gh = &g * &h;
        if resultant_sylvester(&f, &gh) != resultant_sylvester(&f, &g) * resultant_sylvester(&f, &h)
        {
            return Err(format!("R(f, gh) != R(f,g) R(f,h) for f={f}, h={h}, g={g}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn euclidean_reduction_rule() -> Result<usize, String> {
    let mut rng = rng_for(115);
    let mut cases = 0;
    for _ in 0..150 {
        let f = random_nonzero_poly(&mut rng, 4, 9);
        if f.degree() == Some(0) {
            continue;
        }
        let v = random_nonzero_poly(&mut rng, 3, 9);
        let h = random_nonzero_poly(&mut rng, f.degree().unwrap().saturating_sub(1).min(3), 9);
        let g = &(&v * &f) + &h;
        if g.is_zero() {
            continue;
        }
        let m = g.degree().unwrap();
        let d = h.degree().unwrap();
        if d > m {
            continue;
        }
        let a_n = f.leading_coeff().unwrap().clone();
        let lhs = resultant_sylvester(&f, &g);
        let rhs = a_n.pow((m - d) as u32) * resultant_sylvester(&f, &h);
        if lhs != rhs {
            return Err(format!("reduction rule fails: R(f, vf+h) for f={f}, v={v}, h={h}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn power_substitution_resultant() -> Result<usize, String> {
    let mut rng = rng_for(116);
    let mut cases = 0;
    for _ in 0..60 {
        let f = random_nonzero_poly(&mut rng, 6, 9);
        let g = random_nonzero_poly(&mut rng, 6, 9);
        for p in [2usize, 3] {
            let lhs = resultant_sylvester(&f.substitute_power(p), &g.substitute_power(p));
            let rhs = resultant_sylvester(&f, &g).pow(p as u32);
            if lhs != rhs {
                return Err(format!("R(f(x^{p}), g(x^{p})) != R(f,g)^{p} for f={f}, g={g}"));
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn cyclotomic_vs_sylvester() -> Result<usize, String> {
    let mut rng = rng_for(117);
    let mut cases = 0;
    for _ in 0..100 {
        let f = random_nonzero_poly(&mut rng, 4, 9);
        let e = rng.random_range(1..=30u64);
        let sign: i8 = if rng.random_bool(0.5) { 1 } else { -1 };
        let g = &IntPolynomial::monomial(1, e as usize) + &IntPolynomial::constant(sign as i64);
        if cyclotomic_resultant(&f, e, sign) != resultant_sylvester(&f, &g) {
            return Err(format!("fast path disagrees for f={f}, e={e}, sign={sign}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn remainder_determinant() -> Result<usize, String> {
    let mut rng = rng_for(118);
    let mut cases = 0;
    for _ in 0..100 {
        let deg = rng.random_range(1..=4);
        let f = random_monic_poly(&mut rng, deg, 9);
        let g = random_nonzero_poly(&mut rng, 4, 9);
        if !remainder_determinant_identity(&f, &g).map_err(|e| e.to_string())? {
            return Err(format!("a_n^m det(A) != R(f, g) for f={f}, g={g}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn worked_example_fixtures() -> Result<usize, String> {
    let f = parse_poly("x^6+1").expect("fixture parses");
    let g = parse_poly("(x+1)^6+1").expect("fixture parses");
    let expected = BigInt::from(175760);
    for (name, value) in [
        ("sylvester", resultant_sylvester(&f, &g)),
        ("remainder_matrix", resultant_remainder_matrix(&f, &g)),
        ("euclidean", resultant_euclidean(&f, &g)),
    ] {
        if value != expected {
            return Err(format!("{name} engine returned {value}, want 175760"));
        }
    }
    if common_roots(&f, &g, 13).map_err(|e| e.to_string())? != vec![5, 6, 7] {
        return Err("common roots mod 13 are not {5, 6, 7}".into());
    }
    let rm = remainder_matrix(&f, &g).map_err(|e| e.to_string())?;
    let expected_rows: [[i64; 6]; 6] = [
        [1, -6, -15, -20, -15, -6],
        [6, 1, -6, -15, -20, -15],
        [15, 6, 1, -6, -15, -20],
        [20, 15, 6, 1, -6, -15],
        [15, 20, 15, 6, 1, -6],
        [6, 15, 20, 15, 6, 1],
    ];
    for i in 0..6 {
        for j in 0..6 {
            if rm.matrix.get(i, j) != &BigInt::from(expected_rows[i][j]) {
                return Err(format!("remainder matrix entry ({i},{j}) differs"));
            }
        }
    }
    let reduced = rm.matrix.reduce_mod(13).map_err(|e| e.to_string())?;
    if reduced.rank() != 3 {
        return Err("rank mod 13 is not 3".into());
    }
    let rref = reduced.rref();
    let expected_rref: [[u64; 6]; 3] = [
        [1, 0, 0, 7, 4, 8],
        [0, 1, 0, 4, 0, 3],
        [0, 0, 1, 8, 3, 11],
    ];
    for (i, row) in expected_rref.iter().enumerate() {
        if rref.row(i) != row.as_slice() {
            return Err(format!("rref row {i} differs"));
        }
    }
    for i in 3..6 {
        if !rref.is_row_zero(i) {
            return Err(format!("rref row {i} should be zero"));
        }
    }
    let a = analyze(&f, &g, 13).map_err(|e| e.to_string())?;
    if a.ell != 3 || a.rank_p != 3 || a.v_q != Valuation::Finite(3) || !a.bounds_ok() {
        return Err("analysis of the worked example is off".into());
    }
    Ok(1)
}

fn valuation_bound_family() -> Result<usize, String> {
    let mut cases = 0;
    for q in [3u64, 5, 7] {
        let sweep = valuation_bound_sweep(q, 3);
        if !sweep.ok() {
            return Err(sweep.violations().remove(0));
        }
        cases += sweep.ordered_pairs as usize;
    }
    // q = 13 has ~5.7M ordered pairs; the full run lives in the acceptance
    // suite, here a seeded sample keeps the command quick.
    let mut rng = rng_for(119);
    let family = monic_family(13, 3);
    for _ in 0..4000 {
        let f = &family[rng.random_range(0..family.len())];
        let g = &family[rng.random_range(0..family.len())];
        let ell = common_roots(f, g, 13).map_err(|e| e.to_string())?.len() as u32;
        let v = valuation(&resultant_sylvester(f, g), 13);
        if !v.at_least(ell) {
            return Err(format!("v_13(R) < ell for f = {f}, g = {g}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn triangular_zero_rows() -> Result<usize, String> {
    let mut rng = rng_for(120);
    let mut cases = 0;
    for _ in 0..100 {
        let q = [3u64, 5, 7, 13][rng.random_range(0..4)];
        let n = rng.random_range(1..=4);
        let f = random_monic_poly(&mut rng, n, 9);
        let g = random_nonzero_poly(&mut rng, 4, 9);
        if g.is_identically_zero_mod(q) {
            continue;
        }
        let ell = common_roots(&f, &g, q).map_err(|e| e.to_string())?.len();
        let rm = remainder_matrix(&f, &g).map_err(|e| e.to_string())?;
        let (t, _) = rm
            .matrix
            .triangularize_det_preserving(q)
            .map_err(|e| e.to_string())?;
        let image = t.reduce_mod(q).map_err(|e| e.to_string())?;
        let trailing_zero = (0..n).rev().take_while(|&i| image.is_row_zero(i)).count();
        if trailing_zero < ell {
            return Err(format!(
                "only {trailing_zero} trailing zero rows for ell = {ell}, f = {f}, g = {g}, q = {q}"
            ));
        }
        cases += 1;
    }
    Ok(cases)
}

fn residue_split_product() -> Result<usize, String> {
    let mut rng = rng_for(121);
    let mut cases = 0;
    let primes = [3u64, 5, 7, 11, 13];
    for _ in 0..50 {
        let q = primes[rng.random_range(0..primes.len())];
        let f = random_nonzero_poly(&mut rng, 4, 9);
        let half = (q - 1) / 2;
        let prod = cyclotomic_resultant(&f, half, -1) * cyclotomic_resultant(&f, half, 1);
        if prod != cyclotomic_resultant(&f, q - 1, -1) {
            return Err(format!("R- * R+ != R(f, x^{}-1) for f = {f}, q = {q}", q - 1));
        }
        cases += 1;
    }
    Ok(cases)
}

fn root_bound_checks() -> Result<usize, String> {
    let mut rng = rng_for(122);
    let mut cases = 0;
    let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    for _ in 0..100 {
        let q = primes[rng.random_range(0..primes.len())];
        let f = loop {
            let f = random_nonzero_poly(&mut rng, 4, 9);
            if crate::arith::residue(&f.coeff(0), q) != 0 {
                break f;
            }
        };
        let all = check_all_roots_bound(&f, q).map_err(|e| e.to_string())?;
        if all.is_violation() {
            return Err(format!("root-count bound violated for f = {f}, q = {q}"));
        }
        let (minus, plus) = check_residue_split_bounds(&f, q).map_err(|e| e.to_string())?;
        if minus.is_violation() || plus.is_violation() {
            return Err(format!("residue-split bound violated for f = {f}, q = {q}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn lucas_mod_vs_exact() -> Result<usize, String> {
    let mut rng = rng_for(123);
    let mut cases = 0;
    for _ in 0..50 {
        let params = LucasParams::new(rng.random_range(-9i64..=9), rng.random_range(-9i64..=9));
        let m = rng.random_range(2u64..=1_000_000);
        for n in 0..=200u64 {
            let exact = lucas_v_exact(n, &params).map_err(|e| e.to_string())?;
            if lucas_v_mod(n, &params, m) != crate::arith::residue(&exact, m) {
                return Err(format!("V_{n} mod {m} disagrees for {params:?}"));
            }
        }
        cases += 201;
    }
    Ok(cases)
}

fn lucas_doubling() -> Result<usize, String> {
    let mut rng = rng_for(124);
    let mut cases = 0;
    for _ in 0..20 {
        let params = LucasParams::new(rng.random_range(-9i64..=9), rng.random_range(-9i64..=9));
        for n in 0..=100u64 {
            let v2n = lucas_v_exact(2 * n, &params).map_err(|e| e.to_string())?;
            let vn = lucas_v_exact(n, &params).map_err(|e| e.to_string())?;
            let qn = params.q.pow(n as u32);
            if v2n != &vn * &vn - BigInt::from(2) * qn {
                return Err(format!("V_2n != V_n^2 - 2Q^n at n = {n} for {params:?}"));
            }
        }
        cases += 101;
    }
    Ok(cases)
}

fn lucas_congruence_sweep() -> Result<usize, String> {
    let mut rng = rng_for(125);
    let mut cases = 0;
    for q in primes_up_to(199).into_iter().filter(|&q| q > 2) {
        let mut found = 0;
        while found < 10 {
            let params =
                LucasParams::new(rng.random_range(-50i64..=50), rng.random_range(-50i64..=50));
            if crate::arith::residue(&params.q, q) == 0 || legendre(&params.discriminant(), q) != 1
            {
                continue;
            }
            let (full, half) = check_lucas_congruences(&params, q).map_err(|e| e.to_string())?;
            if full.is_violation() || half.is_violation() {
                return Err(format!("congruence violated at q = {q} for {params:?}"));
            }
            let k = BigInt::from(rng.random_range(-20i64..=20));
            let shifted_q = &k * &k + &params.p * &k + &params.q;
            if crate::arith::residue(&shifted_q, q) != 0 {
                let (sf, sh) =
                    check_shifted_congruences(&params, &k, q).map_err(|e| e.to_string())?;
                if sf.is_violation() || sh.is_violation() {
                    return Err(format!("shifted congruence violated at q = {q}, k = {k}"));
                }
            }
            found += 1;
            cases += 1;
        }
    }
    Ok(cases)
}

fn lucas_number_surveys() -> Result<usize, String> {
    let mut cases = 0;
    for q in primes_up_to(199).into_iter().filter(|&q| q > 2) {
        if q % 5 == 1 || q % 5 == 4 {
            let reports = survey_lucas_numbers(q).map_err(|e| e.to_string())?;
            if let Some(bad) = reports.iter().find(|r| r.is_violation()) {
                return Err(format!("Lucas survey violation at q = {q}: {}", bad.subject));
            }
            cases += reports.len();
        }
        if q % 8 == 1 || q % 8 == 7 {
            let reports = survey_pell_lucas_numbers(q).map_err(|e| e.to_string())?;
            if let Some(bad) = reports.iter().find(|r| r.is_violation()) {
                return Err(format!("Pell-Lucas survey violation at q = {q}: {}", bad.subject));
            }
            cases += reports.len();
        }
    }
    Ok(cases)
}

fn bridge_identity() -> Result<usize, String> {
    let mut rng = rng_for(126);
    let mut cases = 0;
    for q in primes_up_to(31).into_iter().filter(|&q| q > 2) {
        for _ in 0..5 {
            let params =
                LucasParams::new(rng.random_range(-20i64..=20), rng.random_range(-20i64..=20));
            let bridge = resultant_lucas_identity(&params, q).map_err(|e| e.to_string())?;
            if !bridge.matches {
                return Err(format!(
                    "bridge mismatch at q = {q} for {params:?}: {} vs {}",
                    bridge.resultant, bridge.closed_form
                ));
            }
            // when the hypotheses hold, q^2 must divide the resultant
            if crate::arith::residue(&params.q, q) != 0
                && legendre(&params.discriminant(), q) == 1
                && !valuation(&bridge.resultant, q).at_least(2)
            {
                return Err(format!("v_{q}(R) < 2 for qualifying {params:?}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn discriminant_shift() -> Result<usize, String> {
    let mut rng = rng_for(127);
    for _ in 0..100 {
        let params = LucasParams::new(rng.random_range(-99i64..=99), rng.random_range(-99i64..=99));
        let k = BigInt::from(rng.random_range(-99i64..=99));
        let shifted = params.shifted(&k);
        if shifted.discriminant() != params.discriminant() {
            return Err(format!("discriminant changed for {params:?}, k = {k}"));
        }
    }
    Ok(100)
}
