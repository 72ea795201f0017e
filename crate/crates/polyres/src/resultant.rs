//! Three independent engines for the exact resultant R(f, g), plus a fast
//! path for resultants against `x^e - 1` and `x^e + 1`.
//!
//! The sign convention is fixed by the Sylvester layout: m rows of f's
//! coefficients above n rows of g's coefficients, each row descending and
//! shifted. Under it R(x - a, x - b) = a - b, R(f, g) is the leading
//! coefficient of f to the m-th power times the product of g over the roots
//! of f, and R(f, g) = (-1)^(nm) R(g, f).

use crate::matrix::IntMatrix;
use crate::poly::{IntPolynomial, RatPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Which engine produced a resultant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Sylvester,
    RemainderMatrix,
    Euclidean,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Sylvester, Engine::RemainderMatrix, Engine::Euclidean];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Sylvester => "sylvester",
            Engine::RemainderMatrix => "remainder_matrix",
            Engine::Euclidean => "euclidean",
        }
    }
}

/// A resultant value together with how it was computed. `degenerate` marks
/// inputs with a zero polynomial, where the resultant is defined as 0.
#[derive(Clone, Debug)]
pub struct ResultantResult {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub engine: Engine,
    pub value: BigInt,
    pub degenerate: bool,
}

/// Computes R(f, g) with the requested engine, flagging zero-polynomial
/// inputs as degenerate (value 0).
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial, engine: Engine) -> ResultantResult {
    let degenerate = f.is_zero() || g.is_zero();
    let value = match engine {
        Engine::Sylvester => resultant_sylvester(f, g),
        Engine::RemainderMatrix => resultant_remainder_matrix(f, g),
        Engine::Euclidean => resultant_euclidean(f, g),
    };
    ResultantResult {
        f: f.clone(),
        g: g.clone(),
        engine,
        value,
        degenerate,
    }
}

/// The (n+m) x (n+m) Sylvester matrix of f and g.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> IntMatrix {
    let n = f.degree().expect("f must be nonzero");
    let m = g.degree().expect("g must be nonzero");
    let size = n + m;
    let mut mat = IntMatrix::zeros(size, size);
    for i in 0..m {
        for j in 0..=n {
            *mat.get_mut(i, i + j) = f.coeff(n - j);
        }
    }
    for i in 0..n {
        for j in 0..=m {
            *mat.get_mut(m + i, i + j) = g.coeff(m - j);
        }
    }
    mat
}

/// R(f, g) as the determinant of the Sylvester matrix.
pub fn resultant_sylvester(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    sylvester_matrix(f, g)
        .det_exact()
        .expect("Sylvester matrix is square")
}

/// Remainder rows for the degree-n modulus f: index k (from the top,
/// k = n-1 down to 0) holds the remainder of `x^k * g` modulo f. Integer
/// arithmetic throughout; requires monic f.
pub(crate) fn remainder_rows_monic(f: &IntPolynomial, g: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree().expect("f must be nonzero");
    debug_assert!(f.is_monic() && n >= 1);
    let mut rows = Vec::with_capacity(n);
    let mut r = g.rem_monic(f);
    rows.push(r.clone());
    for _ in 1..n {
        // r <- (x * r) mod f
        let mut coeffs: Vec<BigInt> = std::iter::once(BigInt::zero())
            .chain(r.coeffs().iter().cloned())
            .collect();
        if coeffs.len() == n + 1 {
            let lead = coeffs.pop().expect("nonempty");
            if !lead.is_zero() {
                for (j, d) in f.coeffs().iter().take(n).enumerate() {
                    let t = &lead * d;
                    coeffs[j] -= t;
                }
            }
        }
        r = IntPolynomial::from_coeffs(coeffs);
        rows.push(r.clone());
    }
    rows.reverse();
    rows
}

/// Rational remainder rows for arbitrary nonzero f of degree >= 1.
pub(crate) fn remainder_rows_rational(f: &IntPolynomial, g: &IntPolynomial) -> Vec<RatPolynomial> {
    let n = f.degree().expect("f must be nonzero");
    debug_assert!(n >= 1);
    let fr = f.to_rational();
    let mut rows = Vec::with_capacity(n);
    let mut r = g.to_rational().div_rem(&fr).1;
    rows.push(r.clone());
    let x = IntPolynomial::monomial(1, 1).to_rational();
    for _ in 1..n {
        r = (&x * &r).div_rem(&fr).1;
        rows.push(r.clone());
    }
    rows.reverse();
    rows
}

/// Packs remainder rows into the n x n integer matrix whose row i holds the
/// coefficients of the remainder of `x^(n-1-i) * g` mod f in descending
/// degree order. For non-monic f the rational rows are lifted by their
/// common denominator, which is returned alongside: the true rational matrix
/// is `matrix / denom`.
pub(crate) fn remainder_matrix_lifted(
    f: &IntPolynomial,
    g: &IntPolynomial,
) -> (IntMatrix, BigInt) {
    let n = f.degree().expect("f must be nonzero");
    if f.is_monic() {
        let rows = remainder_rows_monic(f, g);
        let mat = IntMatrix::from_rows(
            rows.iter()
                .map(|r| (0..n).map(|j| r.coeff(n - 1 - j)).collect::<Vec<_>>()),
        );
        return (mat, BigInt::one());
    }
    let rows = remainder_rows_rational(f, g);
    let denom = rows
        .iter()
        .fold(BigInt::one(), |acc, r| {
            num_integer::Integer::lcm(&acc, &r.denominator_lcm())
        });
    let d = BigRational::from_integer(denom.clone());
    let mat = IntMatrix::from_rows(rows.iter().map(|r| {
        (0..n)
            .map(|j| {
                let scaled = r.coeff(n - 1 - j) * &d;
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect::<Vec<_>>()
    }));
    (mat, denom)
}

/// R(f, g) as `a_n^m` times the determinant of the remainder matrix, after
/// clearing the common-denominator lift. Integer arithmetic throughout when
/// f is monic.
pub fn resultant_remainder_matrix(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let n = f.degree().expect("nonzero");
    let m = g.degree().expect("nonzero");
    let a_n = f.leading_coeff().expect("nonzero").clone();
    if n == 0 {
        // no remainder rows exist; R(c, g) = c^m directly
        return a_n.pow(m as u32);
    }
    let (mat, denom) = remainder_matrix_lifted(f, g);
    let det = mat.det_exact().expect("remainder matrix is square");
    let scaled = a_n.pow(m as u32) * det;
    let denom_pow = denom.pow(n as u32);
    let (value, rem) = num_integer::Integer::div_rem(&scaled, &denom_pow);
    assert!(rem.is_zero(), "remainder-matrix resultant must be integral");
    value
}

fn rational_pow(base: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Recursive Euclidean reduction over exact rationals:
/// R(f, g) = lead(f)^(deg g - deg h) * R(f, h) with h = g mod f, together
/// with the swap rule R(f, g) = (-1)^(nm) R(g, f) and the constant base
/// cases R(f, c) = c^(deg f), R(c, g) = c^(deg g).
fn resultant_rational(f: &RatPolynomial, g: &RatPolynomial) -> BigRational {
    let n = f.degree().expect("f nonzero");
    let m = g.degree().expect("g nonzero");
    if n == 0 && m == 0 {
        return BigRational::one();
    }
    if m == 0 {
        return rational_pow(g.leading_coeff().expect("nonzero"), n);
    }
    if n == 0 {
        return rational_pow(f.leading_coeff().expect("nonzero"), m);
    }
    if n > m {
        let swapped = resultant_rational(g, f);
        return if n * m % 2 == 1 { -swapped } else { swapped };
    }
    let (_, h) = g.div_rem(f);
    if h.is_zero() {
        return BigRational::zero();
    }
    let d = h.degree().expect("nonzero");
    let scale = rational_pow(f.leading_coeff().expect("nonzero"), m - d);
    scale * resultant_rational(f, &h)
}

/// R(f, g) by Euclidean reduction; the accumulated rational must come out
/// integral, anything else is an internal bug.
pub fn resultant_euclidean(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let value = resultant_rational(&f.to_rational(), &g.to_rational());
    assert!(
        value.is_integer(),
        "Euclidean resultant accumulated a non-integer: {value}"
    );
    value.to_integer()
}

/// R(f, x^e + sign) for sign in {-1, +1}, computed without building the full
/// Sylvester matrix: reduce x^e modulo f by square-and-multiply in the
/// quotient ring, then shrink the remaining resultant through the Euclidean
/// rule R(f, x^e + sign) = a_n^(e - deg h) * R(f, h).
pub fn cyclotomic_resultant(f: &IntPolynomial, e: u64, sign: i8) -> BigInt {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    assert!(e >= 1, "exponent must be positive");
    if f.is_zero() {
        return BigInt::zero();
    }
    let n = f.degree().expect("nonzero");
    let a_n = f.leading_coeff().expect("nonzero");
    if n == 0 {
        // R(c, g) = c^deg(g) = c^e
        return a_n.pow(e.try_into().expect("exponent fits u32"));
    }
    let constant = BigRational::from_integer(BigInt::from(sign));
    let fr = f.to_rational();
    let h = &pow_x_mod(e, &fr) + &RatPolynomial::from_coeffs(vec![constant]);
    if h.is_zero() {
        return BigInt::zero();
    }
    let d = h.degree().expect("nonzero") as u64;
    let exp: u32 = (e - d).try_into().expect("exponent fits u32");
    let scale = BigRational::from_integer(a_n.pow(exp));
    let value = scale * resultant_rational(&fr, &h);
    assert!(
        value.is_integer(),
        "cyclotomic-path resultant accumulated a non-integer: {value}"
    );
    value.to_integer()
}

/// `x^e mod f` by binary exponentiation in the quotient ring.
fn pow_x_mod(e: u64, f: &RatPolynomial) -> RatPolynomial {
    let x = RatPolynomial::from_coeffs(vec![BigRational::zero(), BigRational::one()]);
    let mut base = x.div_rem(f).1;
    let mut acc = RatPolynomial::one().div_rem(f).1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).div_rem(f).1;
        }
        e >>= 1;
        if e > 0 {
            base = (&base * &base).div_rem(f).1;
        }
    }
    acc
}
