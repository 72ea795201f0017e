//! Exact integer matrices and matrices over a prime field: fraction-free
//! determinants, mod-q rank and reduced row echelon form, minor enumeration,
//! and the determinant-preserving integer triangularization.

use crate::arith::{inv_mod, is_prime, mul_mod, residue, valuation, Valuation};
use crate::error::Error;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Default cap on the number of minors `minor_valuations` will enumerate.
pub const DEFAULT_MINOR_CAP: u128 = 100_000;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows<I, R, T>(rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntMatrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact determinant by fraction-free (Bareiss) elimination; every
    /// intermediate division is exact. Small matrices take an `i128` path,
    /// guarded by a Hadamard bound so no intermediate product can overflow.
    pub fn det_exact(&self) -> Result<BigInt, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(small) = self.to_i128_within_hadamard_budget() {
            return Ok(BigInt::from(det_bareiss_i128(small, self.rows)));
        }
        Ok(det_bareiss_big(self.entries.clone(), self.rows))
    }

    /// Entrywise residues in `[0, q)` over the field with `q` elements.
    pub fn reduce_mod(&self, q: u64) -> Result<ModMatrix, Error> {
        ModMatrix::new(
            q,
            self.rows,
            self.cols,
            self.entries.iter().map(|e| residue(e, q)).collect(),
        )
    }

    /// Reduces to a matrix whose mod-q image is upper triangular using only
    /// row swaps and additions of integer multiples of one row to another,
    /// so `det(self) = sign * det(result)` exactly.
    ///
    /// Pivots are chosen by scanning the current column top-down among the
    /// remaining rows for the first entry not divisible by q; a column with
    /// none is skipped. An entry `a` below a pivot `p` is cleared mod q by
    /// adding `(-a * p^{-1} mod q)` times the pivot row.
    pub fn triangularize_det_preserving(&self, q: u64) -> Result<(IntMatrix, i8), Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = 1i8;
        let qi = BigInt::from(q);
        let mut r = 0usize;
        for c in 0..n {
            let pivot = (r..n).find(|&i| residue(m.get(i, c), q) != 0);
            let Some(p) = pivot else { continue };
            if p != r {
                for j in 0..n {
                    let (a, b) = (m.get(r, j).clone(), m.get(p, j).clone());
                    *m.get_mut(r, j) = b;
                    *m.get_mut(p, j) = a;
                }
                sign = -sign;
            }
            let pinv = inv_mod(residue(m.get(r, c), q), q);
            for i in r + 1..n {
                let a = residue(m.get(i, c), q);
                if a == 0 {
                    continue;
                }
                // t in [0, q) with a + t*pivot = 0 mod q
                let t = BigInt::from(mul_mod(q - a, pinv, q));
                for j in 0..n {
                    let add = &t * m.get(r, j);
                    *m.get_mut(i, j) += add;
                }
                debug_assert!((m.get(i, c) % &qi).is_zero());
            }
            r += 1;
        }
        Ok((m, sign))
    }

    /// Minimum q-adic valuation over all `k x k` minors (`Infinite` if every
    /// minor vanishes). Enumeration is brute force and capped.
    pub fn minor_valuations(&self, q: u64, k: usize) -> Result<Valuation, Error> {
        self.minor_valuations_capped(q, k, DEFAULT_MINOR_CAP)
    }

    pub fn minor_valuations_capped(&self, q: u64, k: usize, cap: u128) -> Result<Valuation, Error> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorTooLarge {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let count = binomial(self.rows, k) * binomial(self.cols, k);
        if count > cap {
            return Err(Error::MinorCapExceeded { k, count, cap });
        }
        let row_sets: Vec<Vec<usize>> = (0..self.rows).combinations(k).collect();
        let col_sets: Vec<Vec<usize>> = (0..self.cols).combinations(k).collect();
        let minima = crate::par::map_slice(&row_sets, |rs| {
            let mut best = Valuation::Infinite;
            for cs in &col_sets {
                let sub = self.submatrix(rs, cs);
                let det = sub.det_exact().expect("submatrix is square");
                best = best.min(valuation(&det, q));
            }
            best
        });
        Ok(minima.into_iter().min().unwrap_or(Valuation::Infinite))
    }

    fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(row_idx.len(), col_idx.len(), entries)
    }

    /// `i128` copy of the entries if the Bareiss intermediates provably fit.
    /// Bareiss intermediates are minors of the input, so the Hadamard bound
    /// on any minor (taken in log2) bounds every product in the elimination.
    fn to_i128_within_hadamard_budget(&self) -> Option<Vec<i128>> {
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            out.push(e.to_i128()?);
        }
        let mut log2_bound = 0.0f64;
        for i in 0..self.rows {
            let norm_sq: f64 = out[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|&v| {
                    let v = v as f64;
                    v * v
                })
                .sum();
            if norm_sq > 1.0 {
                log2_bound += 0.5 * norm_sq.log2();
            }
        }
        // products of two minors must stay below 2^126
        (log2_bound < 60.0).then_some(out)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn det_bareiss_big(mut m: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = t / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    let det = std::mem::take(&mut m[n * n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn det_bareiss_i128(mut m: Vec<i128>, n: usize) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i * n + k] != 0) else {
                return 0;
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    sign * m[n * n - 1]
}

/// Matrix of residues over the field with a prime number of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn new(q: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self, Error> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(entries.iter().all(|&e| e < q), "entries must lie in [0, q)");
        Ok(ModMatrix {
            modulus: q,
            rows,
            cols,
            entries,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_row_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&e| e == 0)
    }

    /// Rank over the field, by Gaussian elimination with modular inverses.
    pub fn rank(&self) -> usize {
        let q = self.modulus;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    m.swap(rank * cols + j, p * cols + j);
                }
            }
            let pinv = inv_mod(m[rank * cols + c], q);
            for i in rank + 1..rows {
                let a = m[i * cols + c];
                if a == 0 {
                    continue;
                }
                let t = mul_mod(a, pinv, q);
                for j in c..cols {
                    let sub = mul_mod(t, m[rank * cols + j], q);
                    m[i * cols + j] = (m[i * cols + j] + q - sub) % q;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// The unique reduced row echelon form over the field.
    pub fn rref(&self) -> ModMatrix {
        let q = self.modulus;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0usize;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(r * cols + j, p * cols + j);
                }
            }
            let pinv = inv_mod(m[r * cols + c], q);
            for j in 0..cols {
                m[r * cols + j] = mul_mod(m[r * cols + j], pinv, q);
            }
            for i in 0..rows {
                if i == r || m[i * cols + c] == 0 {
                    continue;
                }
                let t = m[i * cols + c];
                for j in 0..cols {
                    let sub = mul_mod(t, m[r * cols + j], q);
                    m[i * cols + j] = (m[i * cols + j] + q - sub) % q;
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
        ModMatrix {
            modulus: q,
            rows,
            cols,
            entries: m,
        }
    }

    /// Determinant over the field (product of pivots with swap sign).
    pub fn det(&self) -> Result<u64, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let q = self.modulus;
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut det = 1u64 % q;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return Ok(0);
            };
            if p != c {
                for j in 0..n {
                    m.swap(c * n + j, p * n + j);
                }
                det = (q - det) % q;
            }
            let pivot = m[c * n + c];
            det = mul_mod(det, pivot, q);
            let pinv = inv_mod(pivot, q);
            for i in c + 1..n {
                let a = m[i * n + c];
                if a == 0 {
                    continue;
                }
                let t = mul_mod(a, pinv, q);
                for j in c..n {
                    let sub = mul_mod(t, m[c * n + j], q);
                    m[i * n + j] = (m[i * n + j] + q - sub) % q;
                }
            }
        }
        Ok(det)
    }
}
