//! Exhaustive and randomized check families over whole parameter spaces.
//! These back the self-check command, the acceptance suite, and the bench
//! comparisons; the heavy loops fan out through [`crate::par`].

use crate::arith::valuation;
use crate::modular::{remainder_matrix, roots_mod};
use crate::poly::IntPolynomial;
use crate::resultant::resultant_sylvester;

/// Every monic polynomial of degree at most `max_deg` with coefficients in
/// `[0, q)`, the degree-0 case being the constant 1.
pub fn monic_family(q: u64, max_deg: usize) -> Vec<IntPolynomial> {
    let mut out = vec![IntPolynomial::one()];
    for deg in 1..=max_deg {
        // odometer over the deg free coefficients below the leading 1
        let mut counters = vec![0u64; deg];
        loop {
            let coeffs: Vec<i64> = counters
                .iter()
                .map(|&c| c as i64)
                .chain(std::iter::once(1))
                .collect();
            out.push(IntPolynomial::from_coeffs(coeffs));
            let mut i = 0;
            loop {
                if i == deg {
                    break;
                }
                counters[i] += 1;
                if counters[i] < q {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == deg {
                break;
            }
        }
    }
    out
}

/// Outcome of the exhaustive family sweep. The three violation lists are
/// split by which bound failed; the bounds are theorems, so any entry is an
/// implementation bug.
#[derive(Clone, Debug)]
pub struct FamilySweep {
    pub q: u64,
    pub max_degree: usize,
    pub family_size: usize,
    pub ordered_pairs: u64,
    /// v_q(R) < ell.
    pub root_count_violations: Vec<String>,
    /// deg f - p < ell.
    pub rank_vs_ell_violations: Vec<String>,
    /// v_q(R) < deg f - p.
    pub valuation_vs_rank_violations: Vec<String>,
}

impl FamilySweep {
    pub fn ok(&self) -> bool {
        self.root_count_violations.is_empty()
            && self.rank_vs_ell_violations.is_empty()
            && self.valuation_vs_rank_violations.is_empty()
    }

    pub fn violations(&self) -> Vec<String> {
        let mut all = self.root_count_violations.clone();
        all.extend(self.rank_vs_ell_violations.clone());
        all.extend(self.valuation_vs_rank_violations.clone());
        all
    }
}

/// Checks, for every ordered pair (f, g) in the monic family, that
/// v_q(R(f, g)) >= ell, that deg f - p >= ell, and that
/// v_q(R(f, g)) >= deg f - p, where ell counts common roots mod q and p is
/// the mod-q rank of the remainder matrix of the pair.
pub fn valuation_bound_sweep(q: u64, max_deg: usize) -> FamilySweep {
    sweep_impl(q, max_deg, true)
}

/// Sequential twin of [`valuation_bound_sweep`]; the bench suite compares
/// the two.
pub fn valuation_bound_sweep_serial(q: u64, max_deg: usize) -> FamilySweep {
    sweep_impl(q, max_deg, false)
}

fn sweep_impl(q: u64, max_deg: usize, parallel: bool) -> FamilySweep {
    assert!(q < 64, "root bitmasks assume q < 64");
    let family = monic_family(q, max_deg);
    let masks: Vec<u64> = family
        .iter()
        .map(|f| {
            roots_mod(f, q)
                .map(|roots| roots.iter().fold(0u64, |m, &r| m | (1 << r)))
                .unwrap_or(0)
        })
        .collect();

    let check_f = |fi: &usize| -> [Vec<String>; 3] {
        let f = &family[*fi];
        let n = f.degree().expect("family polynomials are nonzero");
        let mut local = [Vec::new(), Vec::new(), Vec::new()];
        for (gi, g) in family.iter().enumerate() {
            let ell = (masks[*fi] & masks[gi]).count_ones();
            let res = resultant_sylvester(f, g);
            let v = valuation(&res, q);
            if !v.at_least(ell) {
                local[0].push(format!("v_{q}(R) = {v} < ell = {ell} for f={f}, g={g}"));
            }
            let defect = if n == 0 {
                0
            } else {
                let rm = remainder_matrix(f, g).expect("monic, degree >= 1");
                let p = rm
                    .matrix
                    .reduce_mod(q)
                    .expect("prime modulus")
                    .rank();
                (n - p) as u32
            };
            if defect < ell {
                local[1].push(format!("n - p = {defect} < ell = {ell} for f={f}, g={g}"));
            }
            if !v.at_least(defect) {
                local[2].push(format!("v_{q}(R) = {v} < n - p = {defect} for f={f}, g={g}"));
            }
        }
        local
    };

    let indices: Vec<usize> = (0..family.len()).collect();
    let collected = if parallel {
        crate::par::map_slice(&indices, check_f)
    } else {
        crate::par::map_slice_seq(&indices, check_f)
    };
    let mut sweep = FamilySweep {
        q,
        max_degree: max_deg,
        family_size: family.len(),
        ordered_pairs: (family.len() as u64).pow(2),
        root_count_violations: Vec::new(),
        rank_vs_ell_violations: Vec::new(),
        valuation_vs_rank_violations: Vec::new(),
    };
    for [a, b, c] in collected {
        sweep.root_count_violations.extend(a);
        sweep.rank_vs_ell_violations.extend(b);
        sweep.valuation_vs_rank_violations.extend(c);
    }
    sweep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        // 1 + q + q^2 + q^3 members for degree cap 3
        assert_eq!(monic_family(3, 3).len(), 1 + 3 + 9 + 27);
        assert_eq!(monic_family(5, 2).len(), 1 + 5 + 25);
        assert_eq!(monic_family(13, 0).len(), 1);
        let fam = monic_family(3, 2);
        assert!(fam.iter().all(|f| f.is_monic()));
        let unique: std::collections::HashSet<String> =
            fam.iter().map(|f| f.to_string()).collect();
        assert_eq!(unique.len(), fam.len());
    }

    #[test]
    fn small_sweep_is_clean() {
        let sweep = valuation_bound_sweep(3, 2);
        assert!(sweep.ok(), "violations: {:?}", sweep.violations());
        assert_eq!(sweep.ordered_pairs, 13 * 13);
        let serial = valuation_bound_sweep_serial(3, 2);
        assert!(serial.ok());
        assert_eq!(serial.ordered_pairs, sweep.ordered_pairs);
    }
}
