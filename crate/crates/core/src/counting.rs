//! Rank counts `s(n,r,k)` computed three independent ways.
//!
//! * [`s_recursive`] follows the halving of `S(n,r)` into two translated
//!   copies of `S(n-1,r)`.
//! * [`s_convolution`] multiplies the rank polynomials of the two factors of
//!   `S(n,r) = S(r,r) x S(n-r,0)`. Each factor is a lattice of subsets of
//!   `{1..m}` graded by element sum, so its polynomial is `prod (1 + t^i)`.
//! * [`s_bruteforce`] ranks every word.

use std::cell::RefCell;
use std::collections::HashMap;
use std::io::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeParams;

/// Largest `n` the brute-force census will enumerate.
pub const BRUTEFORCE_MAX_N: u32 = 20;

fn check_range(n: u32, r: u32, k: u64) -> Result<LatticeParams> {
    let params = LatticeParams::new(n, r)?;
    if k > params.rank_bound() {
        return Err(Error::Domain(format!(
            "rank k = {k} exceeds R({n},{r}) = {}",
            params.rank_bound()
        )));
    }
    Ok(params)
}

thread_local! {
    static MEMO: RefCell<HashMap<(u32, u32, u64), BigUint>> = RefCell::new(HashMap::new());
}

fn rank_bound(n: u32, r: u32) -> u64 {
    let r = u64::from(r);
    let m = u64::from(n) - r;
    r * (r + 1) / 2 + m * (m + 1) / 2
}

fn recursive(n: u32, r: u32, k: u64) -> BigUint {
    if n == 0 {
        return if k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if r == n {
        return recursive(n, 0, k);
    }
    if let Some(v) = MEMO.with(|m| m.borrow().get(&(n, r, k)).cloned()) {
        return v;
    }
    let shift = u64::from(n - r);
    let inner = rank_bound(n - 1, r);
    let value = if k < shift {
        recursive(n - 1, r, k)
    } else if k <= inner {
        recursive(n - 1, r, k) + recursive(n - 1, r, k - shift)
    } else {
        recursive(n - 1, r, k - shift)
    };
    MEMO.with(|m| m.borrow_mut().insert((n, r, k), value.clone()));
    value
}

/// `s(n,r,k)` by the three-branch recursion on `n`, with `s(n,n,k) = s(n,0,k)`.
pub fn s_recursive(n: u32, r: u32, k: u64) -> Result<BigUint> {
    check_range(n, r, k)?;
    Ok(recursive(n, r, k))
}

/// Coefficients of `prod_{i=1..m} (1 + t^i)`.
fn subset_sum_polynomial(m: u32) -> Vec<BigUint> {
    let mut coeffs = vec![BigUint::one()];
    for i in 1..=m as usize {
        let mut next = vec![BigUint::zero(); coeffs.len() + i];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + i] += c;
        }
        coeffs = next;
    }
    coeffs
}

/// `s(n,r,k) = sum_i s(r,r,i) * s(n-r,n-r,k-i)`.
pub fn s_convolution(n: u32, r: u32, k: u64) -> Result<BigUint> {
    check_range(n, r, k)?;
    let left = subset_sum_polynomial(r);
    let right = subset_sum_polynomial(n - r);
    let k = k as usize;
    let mut total = BigUint::zero();
    for (i, a) in left.iter().enumerate().take(k + 1) {
        if let Some(c) = right.get(k - i) {
            total += a * c;
        }
    }
    Ok(total)
}

/// Rank census of every word of `S(n,r)`, indexed by rank.
pub fn rank_census(n: u32, r: u32) -> Result<Vec<BigUint>> {
    let params = LatticeParams::new(n, r)?;
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::OutOfScale(format!(
            "brute-force census of S({n},{r}) needs n <= {BRUTEFORCE_MAX_N}"
        )));
    }
    let mut counts = vec![0u64; params.rank_bound() as usize + 1];
    for mask in 0..params.size() {
        let w = params.word_from_mask(mask)?;
        counts[w.rank() as usize] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// `s(n,r,k)` by ranking every word of the lattice.
pub fn s_bruteforce(n: u32, r: u32, k: u64) -> Result<BigUint> {
    check_range(n, r, k)?;
    Ok(rank_census(n, r)?.swap_remove(k as usize))
}

/// Rank-generating polynomial, coefficient `k` being `s(n,r,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankPolynomial {
    pub coefficients: Vec<BigUint>,
}

impl RankPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    pub fn mul(&self, other: &RankPolynomial) -> RankPolynomial {
        let mut out = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RankPolynomial { coefficients: out }
    }
}

pub fn rank_polynomial(n: u32, r: u32) -> Result<RankPolynomial> {
    let params = LatticeParams::new(n, r)?;
    let coefficients = (0..=params.rank_bound())
        .map(|k| recursive(n, r, k))
        .collect();
    Ok(RankPolynomial { coefficients })
}

pub fn check_symmetry(n: u32, r: u32) -> Result<bool> {
    Ok(rank_polynomial(n, r)?.is_palindromic())
}

/// One row of the cross-check table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: u32,
    pub r: u32,
    pub k: u64,
    pub recursive: BigUint,
    pub convolution: BigUint,
    pub bruteforce: BigUint,
}

impl CountRow {
    pub fn agree(&self) -> bool {
        self.recursive == self.convolution && self.convolution == self.bruteforce
    }
}

/// Every `(n, r, k)` with `n <= n_max`, in lexicographic order.
pub fn count_table(n_max: u32) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for r in 0..=n {
            let census = rank_census(n, r)?;
            for (k, brute) in census.into_iter().enumerate() {
                let k = k as u64;
                rows.push(CountRow {
                    n,
                    r,
                    k,
                    recursive: s_recursive(n, r, k)?,
                    convolution: s_convolution(n, r, k)?,
                    bruteforce: brute,
                });
            }
        }
    }
    Ok(rows)
}

/// CSV with header `n,r,k,s_recursive,s_convolution,s_bruteforce,agree`.
pub fn write_csv<W: Write>(rows: &[CountRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "n,r,k,s_recursive,s_convolution,s_bruteforce,agree")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.n,
            row.r,
            row.k,
            row.recursive,
            row.convolution,
            row.bruteforce,
            row.agree()
        )?;
    }
    Ok(())
}
