//! Brute-force enumeration oracles.
//!
//! Each oracle walks the raw state space with a mixed-radix counter and
//! histograms what it sees. Nothing in here may call the generating
//! functions, binomial sums, partition recurrences or series of the other
//! modules: the oracles are only useful as long as they are obviously right.
//! Every oracle refuses (with [`Error::BudgetExceeded`]) rather than
//! enumerate more than its budget of states.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::cgd::OmegaTable;
use crate::error::{Error, Result};
use crate::spinset::SpinMultiset;
use crate::{IntPolynomial, PartitionCount};

/// Upper bound on the number of states an oracle may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_states: u64,
}

impl EnumerationBudget {
    pub fn new(max_states: u64) -> Result<Self> {
        if max_states == 0 {
            return Err(Error::Domain("budget must be positive".into()));
        }
        Ok(EnumerationBudget { max_states })
    }

    fn admit(&self, needed: &BigUint) -> Result<u64> {
        match needed.to_u64() {
            Some(n) if n <= self.max_states => Ok(n),
            _ => Err(Error::BudgetExceeded {
                needed: needed.to_string(),
                budget: self.max_states,
            }),
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_states: 1_000_000,
        }
    }
}

/// Counter over `digits[i] ∈ 0..radix[i]`, last digit fastest.
/// Returns false once every tuple has been produced.
fn advance(digits: &mut [u64], radix: &[u64]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}

fn state_count(radix: &[u64]) -> BigUint {
    radix.iter().map(|&r| BigUint::from(r)).product()
}

/// Histogram of `Σ digits` over every tuple the filter accepts; trailing
/// zeros are trimmed.
fn histogram(radix: &[u64], budget: &EnumerationBudget, keep: impl Fn(&[u64]) -> bool) -> Result<Vec<BigInt>> {
    budget.admit(&state_count(radix))?;
    let mut counts: Vec<u64> = Vec::new();
    let mut digits = vec![0u64; radix.len()];
    loop {
        if keep(&digits) {
            let sum = digits.iter().sum::<u64>() as usize;
            if counts.len() <= sum {
                counts.resize(sum + 1, 0);
            }
            counts[sum] += 1;
        }
        if !advance(&mut digits, radix) {
            break;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// `Ω_n` by visiting every `(n_1, ..., n_N)` with `n_i ∈ 0..=2j_i`.
pub fn oracle_omega(spins: &SpinMultiset, budget: &EnumerationBudget) -> Result<OmegaTable> {
    let radix: Vec<u64> = spins.capacities().iter().map(|c| c + 1).collect();
    Ok(OmegaTable::new(histogram(&radix, budget, |_| true)?))
}

fn identical_radix(twice_j: u64, count: u64) -> Result<Vec<u64>> {
    if twice_j == 0 || count == 0 {
        return Err(Error::Domain("need 2j >= 1 and N >= 1".into()));
    }
    Ok(vec![twice_j + 1; count as usize])
}

/// Orientation multisets: tuples with `n_1 >= n_2 >= ... >= n_N`.
pub fn oracle_sym(twice_j: u64, count: u64, budget: &EnumerationBudget) -> Result<OmegaTable> {
    let radix = identical_radix(twice_j, count)?;
    let values = histogram(&radix, budget, |d| d.windows(2).all(|w| w[0] >= w[1]))?;
    Ok(OmegaTable::new(values))
}

/// Orientation sets: tuples with `n_1 > n_2 > ... > n_N`. Empty when
/// `N > 2j+1`.
pub fn oracle_antisym(twice_j: u64, count: u64, budget: &EnumerationBudget) -> Result<OmegaTable> {
    let radix = identical_radix(twice_j, count)?;
    let values = histogram(&radix, budget, |d| d.windows(2).all(|w| w[0] > w[1]))?;
    Ok(OmegaTable::new(values))
}

/// `Σ q^{(Σ S) - b(b+1)/2}` over the `b`-subsets `S` of `{1..a}`, visited in
/// lexicographic order.
pub fn oracle_qbinom(a: u64, b: u64, budget: &EnumerationBudget) -> Result<IntPolynomial> {
    if b > a {
        return Ok(IntPolynomial::zero());
    }
    // the budget itself is C(a, b); this is a size check, not a result
    let subsets = (0..b).fold(BigUint::one(), |acc, i| acc * (a - i) / (i + 1));
    budget.admit(&subsets)?;
    let base = b * (b + 1) / 2;
    let mut counts: Vec<BigInt> = Vec::new();
    let mut subset: Vec<u64> = (1..=b).collect();
    loop {
        let power = (subset.iter().sum::<u64>() - base) as usize;
        if counts.len() <= power {
            counts.resize(power + 1, BigInt::zero());
        }
        counts[power] += 1;
        // bump the rightmost element that still has room, reset the tail
        let Some(i) = (0..subset.len()).rev().find(|&i| subset[i] < a - (b - 1 - i as u64)) else {
            break;
        };
        subset[i] += 1;
        for t in i + 1..subset.len() {
            subset[t] = subset[t - 1] + 1;
        }
    }
    Ok(IntPolynomial::new(counts))
}

/// Partitions of `k` into at most `m` parts each at most `n`: every
/// nonincreasing `m`-tuple over `0..=n` (zeros meaning absent parts) whose
/// entries sum to `k`.
pub fn oracle_restricted_partitions(n: u64, m: u64, k: i64, budget: &EnumerationBudget) -> Result<PartitionCount> {
    if k < 0 {
        return Ok(BigUint::zero());
    }
    if m == 0 {
        return Ok(BigUint::from(u64::from(k == 0)));
    }
    let radix = vec![n + 1; m as usize];
    budget.admit(&state_count(&radix))?;
    let mut digits = vec![0u64; radix.len()];
    let mut found = 0u64;
    loop {
        if digits.windows(2).all(|w| w[0] >= w[1]) && digits.iter().sum::<u64>() == k as u64 {
            found += 1;
        }
        if !advance(&mut digits, &radix) {
            break;
        }
    }
    Ok(BigUint::from(found))
}
