//! Structured outcome of a single congruence check: both sides reduced by
//! the stated prime power, whether the congruence holds, and whether the
//! hypotheses it depends on were met.

use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    /// Stable identifier for which congruence was checked.
    pub label: String,
    /// Human-readable description of the instance (sequence parameters,
    /// polynomial, shift, ...).
    pub subject: String,
    /// The prime q.
    pub q: u64,
    /// The congruence is taken mod q^modulus_power.
    pub modulus_power: u32,
    /// q^modulus_power.
    pub modulus: BigInt,
    /// Left-hand side reduced into [0, modulus).
    pub lhs: BigInt,
    /// Right-hand side reduced into [0, modulus).
    pub rhs: BigInt,
    /// lhs = rhs (mod q^modulus_power).
    pub holds: bool,
    /// Whether the hypotheses of the underlying statement were satisfied.
    /// When false the congruence is reported but not asserted.
    pub preconditions_met: bool,
    /// Explanation when preconditions_met is false.
    pub reason: Option<String>,
}

impl CongruenceReport {
    /// Reduces both sides mod q^power and records whether they agree.
    pub fn check(
        label: impl Into<String>,
        subject: impl Into<String>,
        q: u64,
        power: u32,
        lhs: &BigInt,
        rhs: &BigInt,
    ) -> Self {
        let modulus = BigInt::from(q).pow(power);
        let (lhs, rhs) = if modulus.is_zero() {
            (lhs.clone(), rhs.clone())
        } else {
            (
                num_integer::Integer::mod_floor(lhs, &modulus),
                num_integer::Integer::mod_floor(rhs, &modulus),
            )
        };
        let holds = lhs == rhs;
        CongruenceReport {
            label: label.into(),
            subject: subject.into(),
            q,
            modulus_power: power,
            modulus,
            lhs,
            rhs,
            holds,
            preconditions_met: true,
            reason: None,
        }
    }

    pub fn with_failed_preconditions(mut self, reason: impl Into<String>) -> Self {
        self.preconditions_met = false;
        self.reason = Some(reason.into());
        self
    }

    /// A report that should count as a failure: hypotheses held but the
    /// congruence did not.
    pub fn is_violation(&self) -> bool {
        self.preconditions_met && !self.holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_both_sides() {
        let r = CongruenceReport::check(
            "demo",
            "L_10",
            11,
            2,
            &BigInt::from(123),
            &BigInt::from(2),
        );
        assert_eq!(r.modulus, BigInt::from(121));
        assert_eq!(r.lhs, BigInt::from(2));
        assert_eq!(r.rhs, BigInt::from(2));
        assert!(r.holds);
        assert!(!r.is_violation());
    }

    #[test]
    fn power_zero_is_trivial() {
        let r = CongruenceReport::check("demo", "", 7, 0, &BigInt::from(9), &BigInt::from(4));
        assert_eq!(r.modulus, BigInt::from(1));
        assert!(r.holds);
    }

    #[test]
    fn failed_preconditions_are_not_violations() {
        let r = CongruenceReport::check("demo", "", 7, 2, &BigInt::from(1), &BigInt::from(2))
            .with_failed_preconditions("discriminant is a non-residue");
        assert!(!r.holds);
        assert!(!r.is_violation());
        assert_eq!(r.reason.as_deref(), Some("discriminant is a non-residue"));
    }
}
