//! Clebsch-Gordan decomposition of a spin multiset.
//!
//! In the occupation-number picture spin `i` contributes `nᵢ ∈ {0..2jᵢ}` and
//! the total projection is `M_n = J₀ - n` with `n = Σ nᵢ`. `Ω_n` counts the
//! tuples with a given `n`, and the multiplicity of `J_κ = J₀ - κ` is
//! `λ_κ = Ω_κ - Ω_{κ-1}`.

pub mod hypergeom;
mod report;

pub use hypergeom::{eval_terminating_pfq, TerminatingSeries};
pub use report::{DecompositionReport, TermReport};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qpoly::{q_analogue, Polynomial};
use crate::scalar::binomial;
use crate::spinset::{format_twice, SpinMultiset};
use crate::IntPolynomial;

/// `Ω₀ .. Ω_{2J₀}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaTable {
    values: Vec<BigInt>,
}

impl OmegaTable {
    pub fn new(values: Vec<BigInt>) -> Self {
        OmegaTable { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> BigInt {
        self.values.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Highest index, `2J₀` for a full table.
    pub fn twice_j0(&self) -> u64 {
        self.values.len().saturating_sub(1) as u64
    }

    pub fn total(&self) -> BigInt {
        self.values.iter().sum()
    }

    /// `Ω_n = Ω_{2J₀-n}`.
    pub fn is_reciprocal(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    /// Nondecreasing up to the middle, with the maximum at `⌊J₀⌋`.
    pub fn is_unimodal(&self) -> bool {
        let mid = self.values.len().saturating_sub(1) / 2;
        self.values[..=mid.min(self.values.len().saturating_sub(1))]
            .windows(2)
            .all(|w| w[0] <= w[1])
            && self.values.iter().all(|v| *v <= self.get(mid))
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        Polynomial::new(self.values.clone())
    }
}

/// One coupled spin `J` (stored as `2J`) with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecompositionTerm {
    pub twice_j: u64,
    pub multiplicity: BigInt,
}

/// The multiset of coupled spins, ordered by descending `J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DecompositionTable {
    terms: Vec<DecompositionTerm>,
}

impl DecompositionTable {
    /// Sorts by descending `J` and merges repeated spins. Zero
    /// multiplicities are dropped.
    pub fn new<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigInt)>,
    {
        let mut merged: std::collections::BTreeMap<u64, BigInt> = Default::default();
        for (twice_j, m) in terms {
            *merged.entry(twice_j).or_default() += m;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, m)| !m.is_zero())
            .map(|(twice_j, multiplicity)| DecompositionTerm {
                twice_j,
                multiplicity,
            })
            .collect();
        DecompositionTable { terms }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[DecompositionTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, twice_j: u64) -> BigInt {
        self.terms
            .iter()
            .find(|t| t.twice_j == twice_j)
            .map(|t| t.multiplicity.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn max_twice_j(&self) -> Option<u64> {
        self.terms.first().map(|t| t.twice_j)
    }

    pub fn min_twice_j(&self) -> Option<u64> {
        self.terms.last().map(|t| t.twice_j)
    }

    /// `Σ λ (2J + 1)`.
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| &t.multiplicity * (t.twice_j + 1))
            .sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|t| (t.twice_j, t.multiplicity.clone())),
        )
    }

    /// Multiplicities in descending-`J` order.
    pub fn multiplicities(&self) -> Vec<BigInt> {
        self.terms.iter().map(|t| t.multiplicity.clone()).collect()
    }
}

impl fmt::Display for DecompositionTable {
    /// `11 ⊕ 5·9 ⊕ ...` in dimensions of the irreducible pieces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            if t.multiplicity.is_one() {
                write!(f, "{}", t.twice_j + 1)?;
            } else {
                write!(f, "{}·{}", t.multiplicity, t.twice_j + 1)?;
            }
        }
        Ok(())
    }
}

/// Which route computes the multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// One polynomial product yields the whole table.
    #[default]
    Genfunc,
    /// Alternating binomial sums, one index at a time.
    Binomial,
    /// Enumeration of multi-restricted partitions.
    Composition,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Genfunc, Method::Binomial, Method::Composition];

    pub fn name(self) -> &'static str {
        match self {
            Method::Genfunc => "genfunc",
            Method::Binomial => "binomial",
            Method::Composition => "composition",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "genfunc" => Ok(Method::Genfunc),
            "binomial" => Ok(Method::Binomial),
            "composition" => Ok(Method::Composition),
            other => Err(Error::parse(other, "unknown method")),
        }
    }
}

fn groups(spins: &SpinMultiset) -> Vec<(u64, u64)> {
    spins.entries().map(|(s, n)| (s.get(), n)).collect()
}

/// `G_Ω(q) = Π ([2j_α + 1]_q)^{N_α}` for groups of `(capacity, count)`.
pub(crate) fn capacity_genfunc(groups: &[(u64, u64)]) -> IntPolynomial {
    groups.iter().fold(Polynomial::one(), |acc, &(cap, count)| {
        acc.mul_ref(&q_analogue(cap + 1).pow(count))
    })
}

/// The whole `Ω` table from the generating function.
pub fn omega_genfunc(spins: &SpinMultiset) -> OmegaTable {
    OmegaTable::new(capacity_genfunc(&groups(spins)).into_coeffs())
}

/// Alternating-sum form of `Ω_n` for groups of `(capacity, count)`.
/// Capacity zero is allowed and contributes a factor of one.
pub(crate) fn capacity_omega_binomial(groups: &[(u64, u64)], n: i64, kernel_shift: i64) -> BigInt {
    let total: u64 = groups.iter().map(|g| g.1).sum();
    if n < 0 {
        return BigInt::zero();
    }
    if total == 0 {
        return BigInt::from(u8::from(n == 0));
    }
    let big_n = total as i64;
    let mut sum = BigInt::zero();
    let mut stack = vec![0u64; groups.len()];
    // enumerate s vectors with Σ (cap+1) s_α <= n, 0 <= s_α <= N_α
    fn walk(
        groups: &[(u64, u64)],
        idx: usize,
        used: i64,
        n: i64,
        s: &mut [u64],
        emit: &mut dyn FnMut(&[u64], i64),
    ) {
        if idx == groups.len() {
            emit(s, used);
            return;
        }
        let (cap, count) = groups[idx];
        let step = cap as i64 + 1;
        let mut k = 0u64;
        while k <= count && used + step * k as i64 <= n {
            s[idx] = k;
            walk(groups, idx + 1, used + step * k as i64, n, s, emit);
            k += 1;
        }
        s[idx] = 0;
    }
    walk(groups, 0, 0, n, &mut stack, &mut |s, used| {
        let mut term = binomial(big_n + n - 1 - kernel_shift - used, big_n - 1 - kernel_shift);
        if term.is_zero() {
            return;
        }
        for (&(_, count), &sa) in groups.iter().zip(s) {
            term *= binomial(count as i64, sa as i64);
        }
        if s.iter().sum::<u64>() % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    });
    sum
}

/// `Ω_n` from the alternating binomial sum; zero outside `0..=2J₀`.
pub fn omega_binomial(spins: &SpinMultiset, n: i64) -> BigInt {
    if n < 0 || n as u64 > spins.twice_j0() {
        return BigInt::zero();
    }
    capacity_omega_binomial(&groups(spins), n, 0)
}

/// `Ω_n` by summing, over every multiset of positive parts that can be
/// placed into the spin channels, the number of placements
/// `Π_ν C(ω(ν) - Σ_{l<ν} s(l), s(ν))`.
pub fn omega_composition(spins: &SpinMultiset, n: i64) -> BigInt {
    if n < 0 || n as u64 > spins.twice_j0() {
        return BigInt::zero();
    }
    let mut caps = spins.capacities();
    caps.sort_unstable_by(|a, b| b.cmp(a));
    let mut total = BigInt::zero();
    let mut parts = Vec::with_capacity(caps.len());
    for_each_placeable_partition(&caps, n as u64, &mut parts, &mut |parts| {
        total += placements(&caps, parts);
    });
    total
}

/// Nonincreasing positive parts `a_1 >= a_2 >= ...` summing to `n` that fit
/// the descending capacities slot by slot (`a_k <= c_k`), which is exactly
/// when the multiset can be distributed one part per channel.
fn for_each_placeable_partition(
    caps_desc: &[u64],
    n: u64,
    parts: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    fn go(
        caps: &[u64],
        remaining: u64,
        max_part: u64,
        parts: &mut Vec<u64>,
        emit: &mut dyn FnMut(&[u64]),
    ) {
        if remaining == 0 {
            emit(parts);
            return;
        }
        let pos = parts.len();
        if pos == caps.len() {
            return;
        }
        let reachable: u64 = caps[pos..].iter().map(|&c| c.min(max_part)).sum();
        if reachable < remaining {
            return;
        }
        let top = max_part.min(caps[pos]).min(remaining);
        for a in (1..=top).rev() {
            let rest = remaining - a;
            let room: u64 = caps[pos + 1..].iter().map(|&c| c.min(a)).sum();
            if rest > room {
                break;
            }
            parts.push(a);
            go(caps, rest, a, parts, emit);
            parts.pop();
        }
    }
    let max = caps_desc.first().copied().unwrap_or(0);
    go(caps_desc, n, max, parts, emit);
}

fn placements(caps: &[u64], parts_desc: &[u64]) -> BigInt {
    let mut product = BigInt::one();
    let mut placed = 0i64;
    let mut i = 0;
    while i < parts_desc.len() {
        let value = parts_desc[i];
        let run = parts_desc[i..].iter().take_while(|&&p| p == value).count();
        let channels = caps.iter().filter(|&&c| c >= value).count() as i64;
        let ways = binomial(channels - placed, run as i64);
        if ways.is_zero() {
            return ways;
        }
        product *= ways;
        placed += run as i64;
        i += run;
    }
    product
}

/// Full `Ω` table by the chosen method.
pub fn omega_table(spins: &SpinMultiset, method: Method) -> OmegaTable {
    let top = spins.twice_j0() as i64;
    match method {
        Method::Genfunc => omega_genfunc(spins),
        Method::Binomial => OmegaTable::new((0..=top).map(|n| omega_binomial(spins, n)).collect()),
        Method::Composition => {
            OmegaTable::new((0..=top).map(|n| omega_composition(spins, n)).collect())
        }
    }
}

/// `λ_κ = Ω_κ - Ω_{κ-1}` for `κ = 0..=m`.
///
/// `m` is read off the table: the differences are positive up to `m` and
/// zero from there to the middle of the table. A negative difference, or a
/// positive one after a zero, means the table is not a valid `Ω` table.
pub fn lambda_from_omega(table: &OmegaTable) -> Result<DecompositionTable> {
    let twice_j0 = table.twice_j0();
    if table.is_empty() {
        return Err(Error::Internal("empty omega table".into()));
    }
    let mut terms = Vec::new();
    let mut ended = false;
    for kappa in 0..=(twice_j0 / 2) as usize {
        let lambda = if kappa == 0 {
            table.get(0)
        } else {
            table.get(kappa) - table.get(kappa - 1)
        };
        if lambda.is_negative() || (ended && lambda.is_positive()) {
            return Err(Error::Internal(format!(
                "inconsistent omega table: lambda_{kappa} = {lambda}"
            )));
        }
        if lambda.is_zero() {
            ended = true;
            if kappa == 0 {
                return Err(Error::Internal("omega table starts with zero".into()));
            }
            continue;
        }
        terms.push((twice_j0 - 2 * kappa as u64, lambda));
    }
    Ok(DecompositionTable::new(terms))
}

/// `λ_κ` from the alternating binomial sum with kernel
/// `C(N + κ - 2 - Σ (2j_α+1) s_α, N - 2)`. Needs `N >= 2` and `0 <= κ <= m`.
pub fn lambda_binomial(spins: &SpinMultiset, kappa: i64) -> Result<BigInt> {
    if spins.len() < 2 {
        return Err(Error::Domain(
            "the binomial multiplicity formula needs at least two spins".into(),
        ));
    }
    let m = spins.distinct_j_count() as i64 - 1;
    if kappa < 0 || kappa > m {
        return Err(Error::Domain(format!("kappa = {kappa} outside 0..={m}")));
    }
    Ok(capacity_omega_binomial(&groups(spins), kappa, 1))
}

/// `G_λ(q) = (1 - q) G_Ω(q)`.
pub fn lambda_genfunc(spins: &SpinMultiset) -> IntPolynomial {
    let one_minus_q = Polynomial::new(vec![BigInt::one(), BigInt::from(-1)]);
    one_minus_q.mul_ref(&omega_genfunc(spins).to_polynomial())
}

/// The decomposition by the chosen method, checked against the dimension
/// identity and the distinct-spin count.
pub fn decompose(spins: &SpinMultiset, method: Method) -> Result<DecompositionTable> {
    let table = match method {
        Method::Genfunc | Method::Composition => lambda_from_omega(&omega_table(spins, method))?,
        Method::Binomial if spins.len() >= 2 => {
            let twice_j0 = spins.twice_j0();
            let m = spins.distinct_j_count() - 1;
            let mut terms = Vec::with_capacity(m as usize + 1);
            for kappa in 0..=m {
                terms.push((twice_j0 - 2 * kappa, lambda_binomial(spins, kappa as i64)?));
            }
            DecompositionTable::new(terms)
        }
        Method::Binomial => {
            let top = spins.twice_j0() as i64;
            lambda_from_omega(&OmegaTable::new(
                (0..=top).map(|n| omega_binomial(spins, n)).collect(),
            ))?
        }
    };
    check_decomposition(spins, &table)?;
    Ok(table)
}

fn check_decomposition(spins: &SpinMultiset, table: &DecompositionTable) -> Result<()> {
    if table.len() as u64 != spins.distinct_j_count()
        || table.max_twice_j() != Some(spins.twice_j0())
        || table.min_twice_j() != Some(spins.twice_jmin())
    {
        return Err(Error::Internal(format!(
            "decomposition of {spins} has spins {:?}..{:?}, expected {}..{}",
            table.max_twice_j(),
            table.min_twice_j(),
            spins.twice_j0(),
            spins.twice_jmin()
        )));
    }
    if table.dimension() != spins.total_dimension() {
        return Err(Error::Internal(format!(
            "decomposition of {spins} has dimension {}, expected {}",
            table.dimension(),
            spins.total_dimension()
        )));
    }
    if table.terms().iter().any(|t| !t.multiplicity.is_positive()) {
        return Err(Error::Internal("nonpositive multiplicity".into()));
    }
    Ok(())
}

fn check_univariate(twice_j: u64, count: u64) -> Result<()> {
    if twice_j == 0 || count == 0 {
        return Err(Error::Domain("need 2j >= 1 and N >= 1".into()));
    }
    Ok(())
}

/// `Ω` for `N` spin-`j`: `Σ_s (-1)^s C(N+n-1-(2j+1)s, N-1) C(N, s)`.
pub fn omega_univariate(twice_j: u64, count: u64, n: i64) -> Result<BigInt> {
    check_univariate(twice_j, count)?;
    Ok(capacity_omega_binomial(&[(twice_j, count)], n, 0))
}

/// `λ` for `N` spin-`j`: `Σ_s (-1)^s C(N+κ-2-(2j+1)s, N-2) C(N, s)`.
pub fn lambda_univariate(twice_j: u64, count: u64, kappa: i64) -> Result<BigInt> {
    check_univariate(twice_j, count)?;
    lambda_binomial(&SpinMultiset::univariate(twice_j, count)?, kappa)
}

/// Spin-∞ limit of `Ω`: `C(N+n-1, n)`.
pub fn omega_zero_range(count: u64, n: i64) -> Result<BigInt> {
    if count == 0 {
        return Err(Error::Domain("need N >= 1".into()));
    }
    Ok(binomial(count as i64 + n - 1, n))
}

/// Spin-∞ limit of `λ`: `C(N+κ-2, κ)`.
pub fn lambda_zero_range(count: u64, kappa: i64) -> Result<BigInt> {
    if count < 2 {
        return Err(Error::Domain("need N >= 2".into()));
    }
    Ok(binomial(count as i64 + kappa - 2, kappa))
}

/// Renders `2J` as `J`.
pub fn spin_label(twice_j: u64) -> String {
    format_twice(twice_j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinset::parse_spins;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn worked() -> SpinMultiset {
        parse_spins("1/2^2,1^4").unwrap()
    }

    #[test]
    fn omega_tables() {
        assert_eq!(
            omega_genfunc(&worked()).values(),
            ints(&[1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1]).as_slice()
        );
        assert_eq!(omega_genfunc(&parse_spins("1/2").unwrap()).values(), ints(&[1, 1]).as_slice());
        assert_eq!(
            omega_genfunc(&parse_spins("1/2^4").unwrap()).values(),
            ints(&[1, 4, 6, 4, 1]).as_slice()
        );
    }

    #[test]
    fn omega_single_index_routes() {
        let a = worked();
        assert_eq!(omega_binomial(&a, 4), BigInt::from(61));
        assert_eq!(omega_binomial(&a, 3), BigInt::from(40));
        assert_eq!(omega_binomial(&a, 0), BigInt::from(1));
        assert_eq!(omega_binomial(&a, 11), BigInt::zero());
        assert_eq!(omega_composition(&a, 4), BigInt::from(61));
        assert_eq!(omega_composition(&a, 0), BigInt::from(1));
        assert_eq!(omega_composition(&parse_spins("1").unwrap(), 2), BigInt::from(1));
    }

    #[test]
    fn composition_terms_of_worked_example() {
        // {1,1,1,1}, {2,1,1}, {2,2} contribute 15, 40, 6
        let mut caps = worked().capacities();
        caps.sort_unstable_by(|a, b| b.cmp(a));
        let mut seen = Vec::new();
        for_each_placeable_partition(&caps, 4, &mut Vec::new(), &mut |p| {
            seen.push((p.to_vec(), placements(&caps, p)));
        });
        assert_eq!(
            seen,
            vec![
                (vec![2, 2], BigInt::from(6)),
                (vec![2, 1, 1], BigInt::from(40)),
                (vec![1, 1, 1, 1], BigInt::from(15)),
            ]
        );
    }

    #[test]
    fn lambdas() {
        let t = lambda_from_omega(&omega_genfunc(&worked())).unwrap();
        assert_eq!(t.multiplicities(), ints(&[1, 5, 13, 21, 21, 9]));
        let half = lambda_from_omega(&OmegaTable::new(ints(&[1, 1]))).unwrap();
        assert_eq!(half.terms(), &[DecompositionTerm { twice_j: 1, multiplicity: BigInt::one() }]);
        let pair = lambda_from_omega(&OmegaTable::new(ints(&[1, 2, 1]))).unwrap();
        assert_eq!(pair, DecompositionTable::new([(2, BigInt::one()), (0, BigInt::one())]));
        assert!(lambda_from_omega(&OmegaTable::new(ints(&[1, 0, 1]))).is_err());
        assert!(lambda_from_omega(&OmegaTable::new(ints(&[2, 1, 2]))).is_err());
    }

    #[test]
    fn lambda_binomial_values() {
        assert_eq!(lambda_binomial(&worked(), 4).unwrap(), BigInt::from(21));
        assert_eq!(lambda_binomial(&parse_spins("1/2^2").unwrap(), 0).unwrap(), BigInt::one());
        assert_eq!(lambda_binomial(&parse_spins("1^2").unwrap(), 2).unwrap(), BigInt::one());
        assert!(matches!(lambda_binomial(&parse_spins("1").unwrap(), 0), Err(Error::Domain(_))));
        assert!(matches!(lambda_binomial(&worked(), 6), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_generating_functions() {
        assert_eq!(
            lambda_genfunc(&worked()).coeffs(),
            ints(&[1, 5, 13, 21, 21, 9, -9, -21, -21, -13, -5, -1]).as_slice()
        );
        assert_eq!(lambda_genfunc(&parse_spins("1/2").unwrap()).coeffs(), ints(&[1, 0, -1]).as_slice());
        assert_eq!(
            lambda_genfunc(&parse_spins("1/2^3").unwrap()).coeffs(),
            ints(&[1, 2, 0, -2, -1]).as_slice()
        );
    }

    #[test]
    fn decompositions_agree() {
        for spec in ["1/2^2,1^4", "1/2", "1^10", "3^1,1/2^1", "5/2^2,1"] {
            let a = parse_spins(spec).unwrap();
            let reference = decompose(&a, Method::Genfunc).unwrap();
            for method in Method::ALL {
                assert_eq!(decompose(&a, method).unwrap(), reference, "{spec} {method:?}");
            }
        }
        let ten = decompose(&parse_spins("1^10").unwrap(), Method::Genfunc).unwrap();
        let ascending: Vec<BigInt> = ten.multiplicities().into_iter().rev().collect();
        assert_eq!(ascending, ints(&[603, 1585, 2025, 1890, 1398, 837, 405, 155, 45, 9, 1]));
        assert_eq!(ten.to_string().split(" ⊕ ").next(), Some("21"));
    }

    #[test]
    fn univariate_formulas() {
        assert_eq!(omega_univariate(1, 4, 2).unwrap(), BigInt::from(6));
        for n in 0..=3 {
            assert_eq!(omega_univariate(3, 1, n).unwrap(), BigInt::one());
        }
        assert_eq!(omega_univariate(2, 3, 3).unwrap(), BigInt::from(7));
        assert_eq!(lambda_univariate(1, 6, 3).unwrap(), BigInt::from(5));
        assert_eq!(lambda_univariate(2, 10, 10).unwrap(), BigInt::from(603));
        assert_eq!(lambda_univariate(1, 2, 1).unwrap(), BigInt::one());
        assert!(lambda_univariate(1, 1, 0).is_err());
        assert!(omega_univariate(0, 3, 1).is_err());
    }

    #[test]
    fn zero_range_limits() {
        assert_eq!(omega_zero_range(3, 2).unwrap(), BigInt::from(6));
        assert_eq!(omega_zero_range(4, 0).unwrap(), BigInt::one());
        assert_eq!(omega_zero_range(1, 9).unwrap(), BigInt::one());
        assert_eq!(lambda_zero_range(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(lambda_zero_range(2, 7).unwrap(), BigInt::one());
        assert_eq!(lambda_zero_range(4, 0).unwrap(), BigInt::one());
        assert!(lambda_zero_range(1, 0).is_err());
        assert!(omega_zero_range(0, 0).is_err());
    }

    #[test]
    fn omega_table_shape() {
        let t = omega_genfunc(&worked());
        assert!(t.is_reciprocal());
        assert!(t.is_unimodal());
        assert_eq!(t.total(), BigInt::from(324));
        assert_eq!(t.twice_j0(), 10);
    }
}
