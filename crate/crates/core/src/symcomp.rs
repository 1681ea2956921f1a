//! Symmetric and antisymmetric compositions of `N` identical spin-`j`.
//!
//! Everything here works in the occupation-number picture: orientation
//! `m = j - k` is the integer `k ∈ {0..2j}`, and a composed state with total
//! `n = Σ k` has projection `J₀ - n`.
//!
//! * symmetric: orientations may repeat, `G⁻ = [2j+N choose N]_q`,
//!   `Ω⁻_n = p(2j, N, n)`;
//! * antisymmetric: orientations are pairwise distinct,
//!   `G⁺ = q^{C(N,2)} [2j+1 choose N]_q`, `Ω⁺_n = p(2j+1-N, N, n - C(N,2))`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cgd::{DecompositionTable, OmegaTable};
use crate::error::{Error, Result};
use crate::qpoly::{partitions_at_most, q_binomial, PartitionCounter};
use crate::spinset::{SpinMultiset, TwiceSpin};
use crate::IntPolynomial;

/// `N` identical spins of spin `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdenticalSystem {
    pub twice_j: TwiceSpin,
    pub count: u64,
}

impl IdenticalSystem {
    pub fn new(twice_j: u64, count: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::Domain("need at least one spin".into()));
        }
        Ok(IdenticalSystem {
            twice_j: TwiceSpin::new(twice_j)?,
            count,
        })
    }

    /// `2J₀ = 2jN`.
    pub fn twice_j0(&self) -> u64 {
        self.twice_j.get() * self.count
    }

    /// Whether the antisymmetric composition has any states (`N <= 2j+1`).
    pub fn antisymmetric_allowed(&self) -> bool {
        self.count <= self.twice_j.dimension()
    }

    /// `C(N, 2)`, the smallest antisymmetric occupation sum.
    pub fn pair_count(&self) -> u64 {
        self.count * (self.count - 1) / 2
    }

    pub fn as_multiset(&self) -> SpinMultiset {
        SpinMultiset::univariate(self.twice_j.get(), self.count).expect("valid system")
    }
}

/// `q^{C(N,2)} [2j+1 choose N]_q`; zero when `N > 2j+1`.
pub fn antisym_genfunc(s: &IdenticalSystem) -> IntPolynomial {
    if !s.antisymmetric_allowed() {
        return IntPolynomial::zero();
    }
    q_binomial::<BigInt>(s.twice_j.dimension(), s.count as i64).shift(s.pair_count() as usize)
}

/// `Ω⁺_n = p(2j+1-N, N, n - C(N,2))`.
pub fn antisym_omega(s: &IdenticalSystem, n: i64) -> BigInt {
    if !s.antisymmetric_allowed() {
        return BigInt::zero();
    }
    let width = s.twice_j.dimension() - s.count;
    BigInt::from(PartitionCounter::new().get(width, s.count, n - s.pair_count() as i64))
}

/// `[2j+N choose N]_q`.
pub fn sym_genfunc(s: &IdenticalSystem) -> IntPolynomial {
    q_binomial(s.twice_j.get() + s.count, s.count as i64)
}

/// `Ω⁻_n = p(2j, N, n)`.
pub fn sym_omega(s: &IdenticalSystem, n: i64) -> BigInt {
    BigInt::from(PartitionCounter::new().get(s.twice_j.get(), s.count, n))
}

// λ_κ = Ω_κ - Ω_{κ-1} for 2κ <= 2J₀, keeping the positive ones.
fn decomposition_from_counts(
    twice_j0: u64,
    mut omega: impl FnMut(i64) -> BigInt,
) -> Result<DecompositionTable> {
    let mut terms = Vec::new();
    let mut previous = BigInt::zero();
    for kappa in 0..=(twice_j0 / 2) {
        let current = omega(kappa as i64);
        let lambda = &current - &previous;
        if lambda.is_negative() {
            return Err(Error::Internal(format!(
                "negative multiplicity {lambda} at kappa = {kappa}"
            )));
        }
        if lambda.is_positive() {
            terms.push((twice_j0 - 2 * kappa, lambda));
        }
        previous = current;
    }
    Ok(DecompositionTable::new(terms))
}

/// Antisymmetric composition. When `N > 2j+1` no state survives and the
/// table is empty.
pub fn antisym_decomposition(s: &IdenticalSystem) -> Result<DecompositionTable> {
    if !s.antisymmetric_allowed() {
        return Ok(DecompositionTable::empty());
    }
    let width = s.twice_j.dimension() - s.count;
    let shift = s.pair_count() as i64;
    let mut counter = PartitionCounter::new();
    decomposition_from_counts(s.twice_j0(), |kappa| {
        BigInt::from(counter.get(width, s.count, kappa - shift))
    })
}

/// Symmetric composition; its top spin is `J₀ = Nj` with multiplicity one.
pub fn sym_decomposition(s: &IdenticalSystem) -> Result<DecompositionTable> {
    let mut counter = PartitionCounter::new();
    decomposition_from_counts(s.twice_j0(), |kappa| {
        BigInt::from(counter.get(s.twice_j.get(), s.count, kappa))
    })
}

/// Decomposition from any `Ω` table of the system (e.g. an enumerated one);
/// entries past the end of the table count as zero.
pub fn decomposition_from_omega(s: &IdenticalSystem, table: &OmegaTable) -> Result<DecompositionTable> {
    decomposition_from_counts(s.twice_j0(), |kappa| {
        table.values().get(kappa as usize).cloned().unwrap_or_default()
    })
}

/// Spin-∞ symmetric limit: `p_N(n)`.
pub fn inf_sym_omega(count: u64, n: i64) -> Result<BigInt> {
    if count == 0 {
        return Err(Error::Domain("need N >= 1".into()));
    }
    Ok(BigInt::from(partitions_at_most(count, n)))
}

/// Spin-∞ antisymmetric limit: `p_N(n - C(N,2))`.
pub fn inf_antisym_omega(count: u64, n: i64) -> Result<BigInt> {
    if count == 0 {
        return Err(Error::Domain("need N >= 1".into()));
    }
    let shift = (count * (count - 1) / 2) as i64;
    Ok(BigInt::from(partitions_at_most(count, n - shift)))
}
