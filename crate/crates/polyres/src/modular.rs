//! Root counting modulo a prime and the divisibility bounds that the
//! resultant must satisfy: if f and g share ell roots mod q then q^ell
//! divides R(f, g), with the sharper rank form q^(n - p) | R(f, g) where p
//! is the mod-q rank of the remainder matrix.

use crate::arith::{is_prime, pow_mod, residue, valuation, Valuation};
use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::report::CongruenceReport;
use crate::resultant::{cyclotomic_resultant, remainder_matrix_lifted, resultant_sylvester};
use num_bigint::BigInt;
use num_traits::Zero;

/// Default cap on the exhaustive residue scan.
pub const ROOT_SCAN_CAP: u64 = 1_000_000;

/// All residues x in [0, q) with f(x) = 0 mod q, by exhaustive scan,
/// in increasing order and without multiplicity.
pub fn roots_mod(f: &IntPolynomial, q: u64) -> Result<Vec<u64>, Error> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q > ROOT_SCAN_CAP {
        return Err(Error::ScanCapExceeded {
            q,
            cap: ROOT_SCAN_CAP,
        });
    }
    if f.is_identically_zero_mod(q) {
        return Err(Error::IdenticallyZeroMod { q });
    }
    let coeffs = f.coeffs_mod(q);
    let hits = crate::par::map_range(0..q, |x| horner_mod(&coeffs, x, q) == 0);
    Ok((0..q).filter(|&x| hits[x as usize]).collect())
}

fn horner_mod(coeffs_asc: &[u64], x: u64, q: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs_asc.iter().rev() {
        acc = (crate::arith::mul_mod(acc, x, q) + c) % q;
    }
    acc
}

/// Sorted intersection of the root sets of f and g mod q.
pub fn common_roots(f: &IntPolynomial, g: &IntPolynomial, q: u64) -> Result<Vec<u64>, Error> {
    let rf = roots_mod(f, q)?;
    let rg = roots_mod(g, q)?;
    Ok(rf.into_iter().filter(|x| rg.binary_search(x).is_ok()).collect())
}

/// The n x n integer remainder matrix for the degree-n modulus f: row i
/// holds the coefficients of the remainder of `x^(n-1-i) * g` mod f in
/// descending degree order. For non-monic f the rational rows are lifted by
/// a common denominator, reported in `denom` (1 for monic f); the exact
/// rational matrix is `matrix / denom`.
#[derive(Clone, Debug)]
pub struct RemainderMatrix {
    pub matrix: IntMatrix,
    pub denom: BigInt,
}

pub fn remainder_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Result<RemainderMatrix, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Err(Error::ZeroPolynomial);
    }
    let (matrix, denom) = remainder_matrix_lifted(f, g);
    Ok(RemainderMatrix { matrix, denom })
}

/// Everything the root/rank analysis mod q produces for one pair (f, g).
#[derive(Clone, Debug)]
pub struct ModAnalysis {
    pub q: u64,
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub roots_f: Vec<u64>,
    pub roots_g: Vec<u64>,
    pub common_roots: Vec<u64>,
    /// Number of common roots.
    pub ell: usize,
    /// Rank of the remainder matrix over Z_q (0 when deg f = 0).
    pub rank_p: usize,
    pub resultant: BigInt,
    /// q-adic valuation of the resultant.
    pub v_q: Valuation,
    /// v_q >= ell.
    pub bound_root_count: bool,
    /// v_q >= deg f - rank_p.
    pub bound_rank: bool,
    /// deg f - rank_p >= ell.
    pub ell_vs_rank: bool,
}

impl ModAnalysis {
    /// All three bounds hold; they are theorems, so a false value signals an
    /// implementation bug.
    pub fn bounds_ok(&self) -> bool {
        self.bound_root_count && self.bound_rank && self.ell_vs_rank
    }
}

/// Runs the full analysis: root sets, remainder-matrix rank, resultant
/// valuation, and the three divisibility bounds. Polynomials identically
/// zero mod q are rejected, matching the excluded trivial case.
pub fn analyze(f: &IntPolynomial, g: &IntPolynomial, q: u64) -> Result<ModAnalysis, Error> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if f.is_identically_zero_mod(q) || g.is_identically_zero_mod(q) {
        return Err(Error::IdenticallyZeroMod { q });
    }
    let roots_f = roots_mod(f, q)?;
    let roots_g = roots_mod(g, q)?;
    let common: Vec<u64> = roots_f
        .iter()
        .copied()
        .filter(|x| roots_g.binary_search(x).is_ok())
        .collect();
    let ell = common.len();
    let n = f.degree().expect("not identically zero implies nonzero");
    let m = g.degree().expect("not identically zero implies nonzero");
    debug_assert!(ell <= n.min(m) || n == 0 || m == 0);

    let res = resultant_sylvester(f, g);
    let v_q = valuation(&res, q);

    let rank_p = if n == 0 {
        0
    } else {
        let rm = remainder_matrix(f, g)?;
        if residue(&rm.denom, q) == 0 {
            // the lift is not invertible mod q, so the matrix has no mod-q image
            return Err(Error::MatrixNotReducible { q });
        }
        rm.matrix.reduce_mod(q)?.rank()
    };

    let defect = (n - rank_p) as u32;
    Ok(ModAnalysis {
        q,
        f: f.clone(),
        g: g.clone(),
        roots_f,
        roots_g,
        common_roots: common,
        ell,
        rank_p,
        resultant: res,
        v_q,
        bound_root_count: v_q.at_least(ell as u32),
        bound_rank: v_q.at_least(defect),
        ell_vs_rank: defect as usize >= ell,
    })
}

/// Root set of f mod q split by quadratic residuosity (Euler's criterion).
/// Zero is classified as neither, but cannot occur when the constant term
/// is a unit mod q.
#[derive(Clone, Debug)]
pub struct QrSplit {
    pub q: u64,
    pub roots: Vec<u64>,
    pub residue_roots: Vec<u64>,
    /// Number of roots that are quadratic residues.
    pub b: usize,
}

pub fn split_roots_by_residue(f: &IntPolynomial, q: u64) -> Result<QrSplit, Error> {
    ensure_odd_prime(q)?;
    let roots = roots_mod(f, q)?;
    let residue_roots: Vec<u64> = roots
        .iter()
        .copied()
        .filter(|&r| r != 0 && pow_mod(r, (q - 1) / 2, q) == 1)
        .collect();
    let b = residue_roots.len();
    Ok(QrSplit {
        q,
        roots,
        residue_roots,
        b,
    })
}

fn ensure_odd_prime(q: u64) -> Result<(), Error> {
    if !is_prime(q) || q == 2 {
        return Err(Error::NotOddPrime(q));
    }
    Ok(())
}

fn ensure_unit_constant_term(f: &IntPolynomial, q: u64) -> Result<(), Error> {
    if residue(&f.coeff(0), q) == 0 {
        return Err(Error::ConstantTermDivisible { q });
    }
    Ok(())
}

/// Counts the roots ell of f mod q and checks that q^ell divides
/// R(f, x^(q-1) - 1). Requires an odd prime and a unit constant term, which
/// keeps every root of f a root of x^(q-1) - 1.
pub fn check_all_roots_bound(f: &IntPolynomial, q: u64) -> Result<CongruenceReport, Error> {
    ensure_odd_prime(q)?;
    ensure_unit_constant_term(f, q)?;
    let ell = roots_mod(f, q)?.len() as u32;
    let r = cyclotomic_resultant(f, q - 1, -1);
    Ok(CongruenceReport::check(
        "root_count_bound",
        format!("R({f}, x^{} - 1)", q - 1),
        q,
        ell,
        &r,
        &BigInt::zero(),
    ))
}

/// Splits the roots of f mod q into quadratic residues and non-residues and
/// checks the two halves of the bound: q^b divides R(f, x^((q-1)/2) - 1)
/// and q^(ell-b) divides R(f, x^((q-1)/2) + 1).
pub fn check_residue_split_bounds(
    f: &IntPolynomial,
    q: u64,
) -> Result<(CongruenceReport, CongruenceReport), Error> {
    ensure_odd_prime(q)?;
    ensure_unit_constant_term(f, q)?;
    let split = split_roots_by_residue(f, q)?;
    let half = (q - 1) / 2;
    let r_minus = cyclotomic_resultant(f, half, -1);
    let r_plus = cyclotomic_resultant(f, half, 1);
    let minus = CongruenceReport::check(
        "residue_root_bound",
        format!("R({f}, x^{half} - 1)"),
        q,
        split.b as u32,
        &r_minus,
        &BigInt::zero(),
    );
    let plus = CongruenceReport::check(
        "nonresidue_root_bound",
        format!("R({f}, x^{half} + 1)"),
        q,
        (split.roots.len() - split.b) as u32,
        &r_plus,
        &BigInt::zero(),
    );
    Ok((minus, plus))
}

/// Lemma-style consistency helper used by tests and the self-check suite:
/// `a_n^m * det(remainder matrix) = R(f, g)` for monic f.
pub fn remainder_determinant_identity(f: &IntPolynomial, g: &IntPolynomial) -> Result<bool, Error> {
    let rm = remainder_matrix(f, g)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    let a_n = f.leading_coeff().expect("nonzero").clone();
    let det = rm.matrix.det_exact()?;
    let lhs = a_n.pow(m as u32) * det;
    let denom_pow = rm.denom.pow(rm.matrix.rows() as u32);
    let rhs = resultant_sylvester(f, g) * denom_pow;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(text: &str) -> IntPolynomial {
        parse_poly(text).unwrap()
    }

    #[test]
    fn roots_fixtures() {
        assert_eq!(roots_mod(&p("x^6+1"), 13).unwrap(), vec![2, 5, 6, 7, 8, 11]);
        assert_eq!(roots_mod(&p("x^4-1"), 5).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(roots_mod(&p("x"), 7).unwrap(), vec![0]);
        assert_eq!(roots_mod(&p("x^2+1"), 5).unwrap(), vec![2, 3]);
        assert!(roots_mod(&p("x^2+1"), 7).unwrap().is_empty());
    }

    #[test]
    fn roots_errors() {
        assert!(matches!(
            roots_mod(&p("13*x^2 + 26"), 13),
            Err(Error::IdenticallyZeroMod { q: 13 })
        ));
        assert!(matches!(roots_mod(&p("x"), 10), Err(Error::NotPrime(10))));
        assert!(matches!(
            roots_mod(&IntPolynomial::zero(), 7),
            Err(Error::IdenticallyZeroMod { q: 7 })
        ));
    }

    #[test]
    fn common_roots_fixtures() {
        assert_eq!(
            common_roots(&p("x^6+1"), &p("(x+1)^6+1"), 13).unwrap(),
            vec![5, 6, 7]
        );
        assert!(common_roots(&p("x"), &p("x+1"), 7).unwrap().is_empty());
        assert_eq!(common_roots(&p("x^2+1"), &p("x^2+1"), 5).unwrap(), vec![2, 3]);
    }

    #[test]
    fn remainder_matrix_monic_self_is_zero() {
        let f = p("x^3+2*x+1");
        let rm = remainder_matrix(&f, &f).unwrap();
        assert_eq!(rm.denom, BigInt::from(1));
        for i in 0..3 {
            for j in 0..3 {
                assert!(rm.matrix.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn remainder_matrix_non_monic_lift() {
        // f = 2x - 1, g = x: r_0 = x mod (2x-1) = 1/2, so the lift is [[1]] / 2
        let rm = remainder_matrix(&p("2*x-1"), &p("x")).unwrap();
        assert_eq!(rm.denom, BigInt::from(2));
        assert_eq!(rm.matrix.get(0, 0), &BigInt::from(1));
    }

    #[test]
    fn remainder_matrix_rejects_constants_and_zero() {
        assert!(remainder_matrix(&p("5"), &p("x")).is_err());
        assert!(remainder_matrix(&IntPolynomial::zero(), &p("x")).is_err());
        assert!(remainder_matrix(&p("x"), &IntPolynomial::zero()).is_err());
    }

    #[test]
    fn analyze_worked_example() {
        let a = analyze(&p("x^6+1"), &p("(x+1)^6+1"), 13).unwrap();
        assert_eq!(a.ell, 3);
        assert_eq!(a.common_roots, vec![5, 6, 7]);
        assert_eq!(a.rank_p, 3);
        assert_eq!(a.resultant, BigInt::from(175760));
        assert_eq!(a.v_q, Valuation::Finite(3));
        assert!(a.bounds_ok());
    }

    #[test]
    fn analyze_zero_resultant() {
        let a = analyze(&p("x-1"), &p("x-1"), 5).unwrap();
        assert_eq!(a.ell, 1);
        assert!(a.resultant.is_zero());
        assert_eq!(a.v_q, Valuation::Infinite);
        assert!(a.bounds_ok());
    }

    #[test]
    fn analyze_no_common_roots() {
        let a = analyze(&p("x"), &p("x+1"), 7).unwrap();
        assert_eq!(a.ell, 0);
        assert_eq!(a.v_q, Valuation::Finite(0));
        assert!(a.bounds_ok());
    }

    #[test]
    fn analyze_rejects_identically_zero() {
        assert!(matches!(
            analyze(&p("13*x^2+26"), &p("x"), 13),
            Err(Error::IdenticallyZeroMod { q: 13 })
        ));
        assert!(matches!(
            analyze(&p("x"), &p("x+1"), 6),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn analyze_non_monic_unit_lead() {
        // leading coefficient 3 is a unit mod 5, so rank analysis still applies
        let a = analyze(&p("3*x^2+1"), &p("x-2"), 5).unwrap();
        assert!(a.bounds_ok());
        assert_eq!(a.ell, a.common_roots.len());
    }

    #[test]
    fn analyze_rejects_non_reducible_lift() {
        // f = 2x + 1 mod 2 is the constant 1; denominators are powers of 2
        let err = analyze(&p("2*x+1"), &p("x"), 2).unwrap_err();
        assert!(matches!(err, Error::MatrixNotReducible { q: 2 }));
    }

    #[test]
    fn qr_split_fixture() {
        let s = split_roots_by_residue(&p("x^2-x-1"), 11).unwrap();
        assert_eq!(s.roots, vec![4, 8]);
        assert_eq!(s.residue_roots, vec![4]); // 4 = 2^2; 8 is not a residue
        assert_eq!(s.b, 1);
        let s2 = split_roots_by_residue(&p("x^2+1"), 13).unwrap();
        assert_eq!(s2.roots, vec![5, 8]);
        assert_eq!(s2.b, 0); // both non-residues mod 13
    }

    #[test]
    fn all_roots_bound_fixtures() {
        let r = check_all_roots_bound(&p("x^2-x-1"), 11).unwrap();
        assert_eq!(r.modulus_power, 2);
        assert!(r.holds); // -121 = 0 mod 121
        let r2 = check_all_roots_bound(&p("x^2+1"), 7).unwrap();
        assert_eq!(r2.modulus_power, 0); // no roots, trivial bound
        assert!(r2.holds);
        let r3 = check_all_roots_bound(&p("x-1"), 5).unwrap();
        assert_eq!(r3.modulus_power, 1);
        assert!(r3.holds); // R = 1^4 - 1 = 0
        assert!(matches!(
            check_all_roots_bound(&p("x^2+x"), 7),
            Err(Error::ConstantTermDivisible { q: 7 })
        ));
        assert!(matches!(
            check_all_roots_bound(&p("x+1"), 2),
            Err(Error::NotOddPrime(2))
        ));
    }

    #[test]
    fn residue_split_fixtures() {
        let (minus, plus) = check_residue_split_bounds(&p("x^2-x-1"), 11).unwrap();
        assert_eq!(minus.modulus_power, 1); // b = 1
        assert!(minus.holds); // R- = -11
        assert_eq!(plus.modulus_power, 1); // ell - b = 1
        assert!(plus.holds); // R+ = 11
        let (m2, p2) = check_residue_split_bounds(&p("x^2+1"), 13).unwrap();
        assert_eq!(m2.modulus_power, 0);
        assert!(m2.holds);
        assert_eq!(p2.modulus_power, 2); // both roots non-residues
        assert!(p2.holds); // R+ = 0 exactly
        let (m3, p3) = check_residue_split_bounds(&p("x^2+3"), 7).unwrap();
        assert_eq!((m3.modulus_power, p3.modulus_power), (1, 1)); // roots {2, 5}: 2 is a QR, 5 is not
        assert!(m3.holds && p3.holds);
    }

    #[test]
    fn remainder_identity_monic() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let n = rng.random_range(1..=4usize);
            let mut coeffs: Vec<i64> = (0..n).map(|_| rng.random_range(-9..=9)).collect();
            coeffs.push(1);
            let f = IntPolynomial::from_coeffs(coeffs);
            let g = loop {
                let d = rng.random_range(0..=4usize);
                let g = IntPolynomial::from_coeffs(
                    (0..=d).map(|_| rng.random_range(-9i64..=9)).collect::<Vec<_>>(),
                );
                if !g.is_zero() {
                    break g;
                }
            };
            assert!(remainder_determinant_identity(&f, &g).unwrap(), "f={f} g={g}");
        }
    }
}
