//! Dense univariate polynomials with exact integer and rational coefficients.
//!
//! Coefficients are stored in ascending order: index `i` holds the coefficient
//! of `x^i`. The zero polynomial is the empty coefficient vector and has no
//! degree; every nonzero polynomial keeps a nonzero leading coefficient.
//! Conversion to the descending order used by matrix rows and display happens
//! only at those boundaries.

use crate::arith::mul_mod;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::from_coeffs(vec![c.into()])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// True iff every coefficient is divisible by `q` (vacuously for zero).
    pub fn is_identically_zero_mod(&self, q: u64) -> bool {
        let q = BigInt::from(q);
        self.coeffs.iter().all(|c| (c % &q).is_zero())
    }

    /// Returns `f(x^p)`: coefficient `a_i` moves to position `i * p`.
    pub fn substitute_power(&self, p: usize) -> Self {
        assert!(p >= 1, "substitution exponent must be positive");
        if self.is_zero() || p == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * p + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `f(x0) mod m`, reducing at every Horner step.
    pub fn eval_mod(&self, x0: i64, m: u64) -> u64 {
        assert!(m >= 2, "modulus must be at least 2");
        let x = x0.rem_euclid(m as i64) as u64;
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, m) + crate::arith::residue(c, m)) % m;
        }
        acc
    }

    /// The coefficient vector reduced mod `m`, ascending.
    pub fn coeffs_mod(&self, m: u64) -> Vec<u64> {
        self.coeffs.iter().map(|c| crate::arith::residue(c, m)).collect()
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = IntPolynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Remainder of `self` modulo a monic divisor, staying in integers.
    pub fn rem_monic(&self, div: &IntPolynomial) -> IntPolynomial {
        assert!(div.is_monic(), "divisor must be monic");
        let n = div.coeffs.len() - 1;
        if n == 0 {
            return IntPolynomial::zero();
        }
        let mut rem = self.coeffs.clone();
        while rem.len() > n {
            let lead = rem.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = rem.len() - n;
            for (j, d) in div.coeffs.iter().take(n).enumerate() {
                let t = &lead * d;
                rem[shift + j] -= t;
            }
        }
        IntPolynomial::from_coeffs(rem)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone())),
        )
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical text form: descending order, explicit `*`, no zero terms,
    /// e.g. `x^6 + 1` or `-3*x^2 + x - 5`. Parsing this output reproduces
    /// the polynomial exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = crate::parse::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_poly(s)
    }
}

/// Polynomial with exact rational coefficients, ascending order. `BigRational`
/// keeps every entry in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPolynomial::from_coeffs(vec![BigRational::one()])
    }

    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let mut coeffs: Vec<BigRational> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exact Euclidean division: `self = quotient * den + remainder` with
    /// `deg remainder < deg den` (or zero remainder).
    pub fn div_rem(&self, den: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dn = den.coeffs.len() - 1;
        if self.coeffs.len() <= dn {
            return (RatPolynomial::zero(), self.clone());
        }
        let lead = den.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); self.coeffs.len() - dn];
        while rem.len() > dn {
            let top = rem.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let factor = &top / lead;
            let shift = rem.len() - dn;
            for (j, d) in den.coeffs.iter().take(dn).enumerate() {
                let t = &factor * d;
                rem[shift + j] -= t;
            }
            quo[shift] = factor;
        }
        (
            RatPolynomial::from_coeffs(quo),
            RatPolynomial::from_coeffs(rem),
        )
    }

    /// Least common multiple of all coefficient denominators (1 if empty).
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Exact conversion back to integer coefficients, if every denominator is 1.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPolynomial::from_coeffs(out))
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPolynomial { coeffs }
    }
}
