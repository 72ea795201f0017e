//! Lucas sequences V_n(P, Q) and their congruences mod q^2.
//!
//! V_0 = 2, V_1 = P, V_i = P*V_{i-1} - Q*V_{i-2}. Lucas numbers are
//! V_n(1, -1) and Pell-Lucas numbers are V_n(2, -1). When the discriminant
//! P^2 - 4Q is a quadratic residue mod an odd prime q (and Q is a unit),
//! V_{q-1} = Q^{q-1} + 1 and V_{(q-1)/2}^2 = (Q^{(q-1)/2} + 1)^2 mod q^2;
//! shifting (P, Q) to (P + 2k, k^2 + Pk + Q) preserves the discriminant and
//! the congruences.

use crate::arith::{is_prime, mul_mod, pow_mod, residue};
use crate::error::Error;
use crate::poly::IntPolynomial;
use crate::report::CongruenceReport;
use crate::resultant::cyclotomic_resultant;
use num_bigint::BigInt;

/// Cap for exact (non-modular) sequence evaluation; values grow exponentially.
pub const EXACT_INDEX_CAP: u64 = 10_000;
/// Largest prime accepted by [`resultant_lucas_identity`].
pub const BRIDGE_PRIME_CAP: u64 = 101;

/// Sequence parameters (P, Q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasParams {
    pub p: BigInt,
    pub q: BigInt,
}

impl LucasParams {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        LucasParams {
            p: p.into(),
            q: q.into(),
        }
    }

    /// Lucas numbers L_n.
    pub fn lucas() -> Self {
        LucasParams::new(1, -1)
    }

    /// Pell-Lucas numbers.
    pub fn pell_lucas() -> Self {
        LucasParams::new(2, -1)
    }

    pub fn discriminant(&self) -> BigInt {
        &self.p * &self.p - BigInt::from(4) * &self.q
    }

    /// Parameters shifted by k: (P + 2k, k^2 + Pk + Q). The discriminant is
    /// unchanged: (P + 2k)^2 - 4(k^2 + Pk + Q) = P^2 - 4Q.
    pub fn shifted(&self, k: &BigInt) -> Self {
        let shifted = LucasParams {
            p: &self.p + BigInt::from(2) * k,
            q: k * k + &self.p * k + &self.q,
        };
        assert_eq!(
            shifted.discriminant(),
            self.discriminant(),
            "parameter shift must preserve the discriminant"
        );
        shifted
    }

    /// The characteristic polynomial x^2 - Px + Q.
    pub fn characteristic_poly(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![self.q.clone(), -&self.p, BigInt::from(1)])
    }
}

/// Exact V_n by iterating the recurrence; capped because values grow
/// exponentially in n.
pub fn lucas_v_exact(n: u64, params: &LucasParams) -> Result<BigInt, Error> {
    if n > EXACT_INDEX_CAP {
        return Err(Error::SequenceCapExceeded {
            n,
            cap: EXACT_INDEX_CAP,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(2));
    }
    let mut prev = BigInt::from(2);
    let mut cur = params.p.clone();
    for _ in 1..n {
        let next = &params.p * &cur - &params.q * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// V_n mod m in O(log n) steps by fast doubling on the pair (V_k, V_{k+1})
/// with Q^k carried along: V_{2k} = V_k^2 - 2Q^k and
/// V_{2k+1} = V_k V_{k+1} - P Q^k.
pub fn lucas_v_mod(n: u64, params: &LucasParams, m: u64) -> u64 {
    assert!(m >= 2, "modulus must be at least 2");
    let p = residue(&params.p, m);
    let q = residue(&params.q, m);
    if n == 0 {
        return 2 % m;
    }
    // invariant: (v, w, qk) = (V_k, V_{k+1}, Q^k) for the prefix k of n's bits
    let mut v = 2 % m;
    let mut w = p;
    let mut qk = 1 % m;
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        let v2 = sub_mod(mul_mod(v, v, m), mul_mod(2 % m, qk, m), m); // V_{2k}
        let v2p1 = sub_mod(mul_mod(v, w, m), mul_mod(p, qk, m), m); // V_{2k+1}
        let qk2 = mul_mod(qk, qk, m); // Q^{2k}
        if (n >> i) & 1 == 0 {
            v = v2;
            w = v2p1;
            qk = qk2;
        } else {
            // V_{2k+2} = V_{k+1}^2 - 2 Q^{k+1}
            let v2p2 = sub_mod(mul_mod(w, w, m), mul_mod(2 % m, mul_mod(qk, q, m), m), m);
            v = v2p1;
            w = v2p2;
            qk = mul_mod(qk2, q, m);
        }
    }
    v
}

#[inline]
fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    (a + m - b) % m
}

/// Legendre symbol (a/q) for an odd prime q via Euler's criterion.
pub fn legendre(a: &BigInt, q: u64) -> i32 {
    debug_assert!(is_prime(q) && q > 2);
    let r = residue(a, q);
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (q - 1) / 2, q) == 1 {
        1
    } else {
        -1
    }
}

fn ensure_odd_prime(q: u64) -> Result<(), Error> {
    if !is_prime(q) || q == 2 {
        return Err(Error::NotOddPrime(q));
    }
    Ok(())
}

/// q^2 as a u64, or an error if it cannot be represented.
fn prime_square(q: u64) -> Result<u64, Error> {
    q.checked_mul(q).ok_or(Error::PrimeTooLarge {
        q,
        cap: u32::MAX as u64,
    })
}

fn precondition_failure(params: &LucasParams, prime: u64) -> Option<String> {
    if residue(&params.q, prime) == 0 {
        return Some(format!("Q = {} is divisible by {prime}", params.q));
    }
    let disc = params.discriminant();
    match legendre(&disc, prime) {
        1 => None,
        sym => Some(format!(
            "legendre({disc}, {prime}) = {sym}, need a nonzero quadratic residue"
        )),
    }
}

fn subject(params: &LucasParams) -> String {
    format!("V(P={}, Q={})", params.p, params.q)
}

/// Checks the two congruences V_{q-1} = Q^{q-1} + 1 and
/// V_{(q-1)/2}^2 = (Q^{(q-1)/2} + 1)^2, both mod q^2. Violated hypotheses
/// (Q divisible by q, or a non-residue discriminant) are reported in
/// `preconditions_met` rather than asserted.
pub fn check_lucas_congruences(
    params: &LucasParams,
    prime: u64,
) -> Result<(CongruenceReport, CongruenceReport), Error> {
    ensure_odd_prime(prime)?;
    let m = prime_square(prime)?;
    let failure = precondition_failure(params, prime);
    let q_res = residue(&params.q, m);

    let v_full = lucas_v_mod(prime - 1, params, m);
    let rhs_full = (pow_mod(q_res, prime - 1, m) + 1) % m;
    let mut full = CongruenceReport::check(
        "v_full_index",
        subject(params),
        prime,
        2,
        &BigInt::from(v_full),
        &BigInt::from(rhs_full),
    );

    let half = (prime - 1) / 2;
    let v_half = lucas_v_mod(half, params, m);
    let lhs_half = mul_mod(v_half, v_half, m);
    let base = (pow_mod(q_res, half, m) + 1) % m;
    let rhs_half = mul_mod(base, base, m);
    let mut half_sq = CongruenceReport::check(
        "v_half_index_squared",
        subject(params),
        prime,
        2,
        &BigInt::from(lhs_half),
        &BigInt::from(rhs_half),
    );

    if let Some(reason) = failure {
        full = full.with_failed_preconditions(reason.clone());
        half_sq = half_sq.with_failed_preconditions(reason);
    }
    Ok((full, half_sq))
}

/// Applies [`check_lucas_congruences`] to the shifted parameters
/// (P + 2k, k^2 + Pk + Q), whose discriminant equals the original one.
pub fn check_shifted_congruences(
    params: &LucasParams,
    k: &BigInt,
    prime: u64,
) -> Result<(CongruenceReport, CongruenceReport), Error> {
    ensure_odd_prime(prime)?;
    let shifted = params.shifted(k);
    let (mut full, mut half) = check_lucas_congruences(&shifted, prime)?;
    let tag = format!("{} [k={k} from {}]", subject(&shifted), subject(params));
    full.subject = tag.clone();
    half.subject = tag;
    Ok((full, half))
}

/// Exhaustive check family for the Lucas numbers at an odd prime with
/// q = +/-1 mod 5 (so the discriminant 5 is a residue): the k = 0
/// specializations L_{q-1} = 2 and L_{(q-1)/2}^2 = 2 + 2*(-1)^((q-1)/2)
/// mod q^2, then every shift k in [0, q) with k^2 + k - 1 a unit mod q.
pub fn survey_lucas_numbers(prime: u64) -> Result<Vec<CongruenceReport>, Error> {
    survey_family(prime, &LucasParams::lucas(), 5, "lucas_number")
}

/// Same family for the Pell-Lucas numbers, at primes q = +/-1 mod 8
/// (discriminant 8 a residue), shifts with k^2 + 2k - 1 a unit.
pub fn survey_pell_lucas_numbers(prime: u64) -> Result<Vec<CongruenceReport>, Error> {
    survey_family(prime, &LucasParams::pell_lucas(), 8, "pell_lucas_number")
}

fn survey_family(
    prime: u64,
    params: &LucasParams,
    residue_modulus: u64,
    label_stem: &str,
) -> Result<Vec<CongruenceReport>, Error> {
    ensure_odd_prime(prime)?;
    if prime % residue_modulus != 1 && prime % residue_modulus != residue_modulus - 1 {
        return Err(Error::WrongResidueClass {
            q: prime,
            modulus: residue_modulus,
        });
    }
    let m = prime_square(prime)?;
    let half = (prime - 1) / 2;

    let mut out = Vec::new();
    // k = 0 specializations: V_{q-1} = 2 and V_{(q-1)/2}^2 = 2 + 2*(-1)^((q-1)/2)
    let v_full = lucas_v_mod(prime - 1, params, m);
    out.push(CongruenceReport::check(
        format!("{label_stem}_full_index"),
        subject(params),
        prime,
        2,
        &BigInt::from(v_full),
        &BigInt::from(2),
    ));
    let v_half = lucas_v_mod(half, params, m);
    let sign_term: i64 = if half % 2 == 0 { 4 } else { 0 }; // 2 + 2*(-1)^half
    out.push(CongruenceReport::check(
        format!("{label_stem}_half_index_squared"),
        subject(params),
        prime,
        2,
        &BigInt::from(mul_mod(v_half, v_half, m)),
        &BigInt::from(sign_term),
    ));

    // shifted instances, right-hand sides evaluated in expanded form
    let shift_reports = crate::par::map_range(0..prime, |k| {
        let kb = BigInt::from(k);
        let shifted = params.shifted(&kb);
        let c = residue(&shifted.q, m);
        if c % prime == 0 {
            return Vec::new();
        }
        let mut reports = Vec::with_capacity(2);
        let v_full = lucas_v_mod(prime - 1, &shifted, m);
        let rhs_full = (pow_mod(c, prime - 1, m) + 1) % m;
        reports.push(CongruenceReport::check(
            "shifted_full_index",
            format!("{} [k={k}]", subject(&shifted)),
            prime,
            2,
            &BigInt::from(v_full),
            &BigInt::from(rhs_full),
        ));
        let v_half = lucas_v_mod(half, &shifted, m);
        let c_half = pow_mod(c, half, m);
        let rhs_half = (pow_mod(c, prime - 1, m) + mul_mod(2 % m, c_half, m) + 1) % m;
        reports.push(CongruenceReport::check(
            "shifted_half_index_squared",
            format!("{} [k={k}]", subject(&shifted)),
            prime,
            2,
            &BigInt::from(mul_mod(v_half, v_half, m)),
            &BigInt::from(rhs_half),
        ));
        reports
    });
    out.extend(shift_reports.into_iter().flatten());
    Ok(out)
}

/// Both sides of the identity R(x^2 - Px + Q, x^(q-1) - 1)
/// = 1 + Q^(q-1) - V_{q-1}(P, Q), computed independently: the left through
/// the resultant engine, the right through the exact recurrence.
#[derive(Clone, Debug)]
pub struct BridgeCheck {
    pub resultant: BigInt,
    pub closed_form: BigInt,
    pub matches: bool,
}

pub fn resultant_lucas_identity(params: &LucasParams, prime: u64) -> Result<BridgeCheck, Error> {
    ensure_odd_prime(prime)?;
    if prime > BRIDGE_PRIME_CAP {
        return Err(Error::PrimeTooLarge {
            q: prime,
            cap: BRIDGE_PRIME_CAP,
        });
    }
    let f = params.characteristic_poly();
    let resultant = cyclotomic_resultant(&f, prime - 1, -1);
    let v = lucas_v_exact(prime - 1, params)?;
    let q_pow = params.q.pow((prime - 1) as u32);
    let closed_form = BigInt::from(1) + q_pow - v;
    let matches = resultant == closed_form;
    Ok(BridgeCheck {
        resultant,
        closed_form,
        matches,
    })
}
