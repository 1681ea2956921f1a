//! Counting problems that reduce to a Clebsch-Gordan decomposition or to an
//! `Ω` table: Catalan and Riordan numbers, isotropic tensor counts,
//! compositions with bounded parts, and dice sums.
//!
//! The sequences are read off the decomposition machinery on purpose; the
//! closed forms live only in the tests.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cgd::{capacity_omega_binomial, lambda_binomial};
use crate::error::{Error, Result};
use crate::spinset::SpinMultiset;
use crate::Rational;

// Multiplicity of J = 0, i.e. λ at κ = J₀.
fn singlet_multiplicity(spins: &SpinMultiset) -> Result<BigInt> {
    if spins.twice_jmin() > 0 {
        return Ok(BigInt::zero());
    }
    lambda_binomial(spins, (spins.twice_j0() / 2) as i64)
}

/// `C_v`, the number of singlets among `2v` spin-½.
pub fn catalan(v: u64) -> BigInt {
    if v == 0 {
        return BigInt::from(1);
    }
    let spins = SpinMultiset::univariate(1, 2 * v).expect("nonempty");
    singlet_multiplicity(&spins).expect("kappa within range")
}

/// `R_v`, the number of singlets among `v` spin-1.
pub fn riordan(v: u64) -> BigInt {
    isotropic_isomers(3, v).expect("dimension 3 is valid")
}

/// Number of linearly independent isotropic rank-`rank` tensors in `D`
/// dimensions: the singlet count of `rank` copies of twice-spin `D-1`.
pub fn isotropic_isomers(dim: u64, rank: u64) -> Result<BigInt> {
    if dim < 2 {
        return Err(Error::Domain(format!("dimension must be at least 2, got {dim}")));
    }
    if rank == 0 {
        return Ok(BigInt::from(1));
    }
    singlet_multiplicity(&SpinMultiset::univariate(dim - 1, rank)?)
}

/// Parts `n_α` (the largest allowed value) with multiplicity `d_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSpec {
    parts: BTreeMap<u64, u64>,
    pub zero_allowed: bool,
}

impl CompositionSpec {
    pub fn new<I: IntoIterator<Item = (u64, u64)>>(parts: I, zero_allowed: bool) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (max, count) in parts {
            if max == 0 || count == 0 {
                return Err(Error::Domain(format!("part bound {max} with count {count}")));
            }
            *map.entry(max).or_insert(0) += count;
        }
        if map.is_empty() {
            return Err(Error::Domain("empty composition spec".into()));
        }
        Ok(CompositionSpec {
            parts: map,
            zero_allowed,
        })
    }

    /// `(n_α, d_α)` pairs in ascending `n_α`.
    pub fn parts(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.parts.iter().map(|(&a, &b)| (a, b))
    }

    /// Number of slots `N = Σ d_α`.
    pub fn slots(&self) -> u64 {
        self.parts.values().sum()
    }

    /// `Σ d_α n_α`, the largest reachable total.
    pub fn max_total(&self) -> u64 {
        self.parts().map(|(a, b)| a * b).sum()
    }

    /// Parses `"2^5,4^3,5^4"`; zero parts are disallowed unless set later.
    pub fn parse(text: &str, zero_allowed: bool) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let (max, count) = match item.split_once('^') {
                Some((m, c)) => (m, c),
                None => (item, "1"),
            };
            let max: u64 = max
                .trim()
                .parse()
                .map_err(|_| Error::parse(item, "part bound must be a positive integer"))?;
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| Error::parse(item, "count must be a positive integer"))?;
            if max == 0 || count == 0 {
                return Err(Error::parse(item, "part bound and count must be positive"));
            }
            pairs.push((max, count));
        }
        Self::new(pairs, zero_allowed)
    }
}

impl fmt::Display for CompositionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .parts()
            .map(|(a, b)| if b == 1 { a.to_string() } else { format!("{a}^{b}") })
            .collect();
        f.write_str(&items.join(","))
    }
}

impl FromStr for CompositionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, false)
    }
}

/// Compositions of `n` into `N = Σ d_α` ordered slots, `d_α` of which take
/// values up to `n_α`. Without zero the slots take `1..=n_α`, which shifts
/// every bound and the total down by one per slot.
pub fn count_compositions(spec: &CompositionSpec, n: i64) -> BigInt {
    let (groups, target): (Vec<(u64, u64)>, i64) = if spec.zero_allowed {
        (spec.parts().collect(), n)
    } else {
        (
            spec.parts().map(|(a, b)| (a - 1, b)).collect(),
            n - spec.slots() as i64,
        )
    };
    let reach: u64 = groups.iter().map(|(a, b)| a * b).sum();
    if target < 0 || target as u64 > reach {
        return BigInt::zero();
    }
    capacity_omega_binomial(&groups, target, 0)
}

/// Probability that `dice` fair six-sided dice sum to `total`.
pub fn dice_probability(dice: u64, total: i64) -> Result<Rational> {
    if dice == 0 {
        return Err(Error::Domain("need at least one die".into()));
    }
    let spec = CompositionSpec::new([(6, dice)], false)?;
    let outcomes = BigInt::from(6u8).pow(dice as u32);
    Ok(Rational::new(count_compositions(&spec, total), outcomes))
}

/// Decimal expansion of `value` rounded half away from zero to `digits`
/// places.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u8).pow(digits as u32);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(BigInt::from(1), BigInt::from(2))).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
    }
}
