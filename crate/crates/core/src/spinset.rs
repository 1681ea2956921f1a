//! Spin multisets, the textual spin grammar, and the extremal coupled spins.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! spec := item ("," item)*
//! item := spin ("^" mult)?
//! spin := INT | INT "/" "2"      (numerator odd in the second form)
//! mult := positive INT
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A spin stored as the integer `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwiceSpin(pub u64);

impl TwiceSpin {
    /// Rejects zero: user-facing spins start at one half.
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            return Err(Error::parse("0", "spin 0 is not allowed"));
        }
        Ok(TwiceSpin(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Number of orientations, `2j + 1`.
    pub fn dimension(self) -> u64 {
        self.0 + 1
    }
}

impl fmt::Display for TwiceSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_twice(self.0))
    }
}

/// Renders a twice-spin value as a spin: `4 -> "2"`, `9 -> "9/2"`.
pub fn format_twice(twice: u64) -> String {
    if twice.is_multiple_of(2) {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// Heaviside step with `H(0) = 1`.
pub fn heaviside(x: i64) -> u64 {
    u64::from(x >= 0)
}

/// The input collection of spins, grouped by distinct value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinMultiset {
    entries: BTreeMap<TwiceSpin, u64>,
}

impl SpinMultiset {
    /// Builds a multiset from `(twice_spin, multiplicity)` pairs. Repeated
    /// spins are merged.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut entries = BTreeMap::new();
        for (twice, mult) in pairs {
            let spin = TwiceSpin::new(twice)?;
            if mult == 0 {
                return Err(Error::parse(
                    format!("{}^0", format_twice(twice)),
                    "multiplicity must be positive",
                ));
            }
            *entries.entry(spin).or_insert(0) += mult;
        }
        if entries.is_empty() {
            return Err(Error::parse("", "empty spin specification"));
        }
        Ok(SpinMultiset { entries })
    }

    /// `N` copies of one spin.
    pub fn univariate(twice_j: u64, count: u64) -> Result<Self> {
        Self::new([(twice_j, count)])
    }

    /// Distinct spins with their multiplicities, ascending by spin.
    pub fn entries(&self) -> impl Iterator<Item = (TwiceSpin, u64)> + '_ {
        self.entries.iter().map(|(&s, &n)| (s, n))
    }

    /// Every spin with repetition, as twice-spin capacities, ascending.
    pub fn capacities(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|(s, &n)| std::iter::repeat_n(s.0, n as usize))
            .collect()
    }

    /// Total number of spins, `N`.
    pub fn len(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct spin values, `σ`.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn max_spin(&self) -> TwiceSpin {
        *self.entries.keys().next_back().expect("multiset is nonempty")
    }

    /// `2 J₀ = Σ 2jᵢ`.
    pub fn twice_j0(&self) -> u64 {
        self.entries.iter().map(|(s, &n)| s.0 * n).sum()
    }

    /// `2 J_m`, the smallest coupled spin.
    pub fn twice_jmin(&self) -> u64 {
        let twice_j0 = self.twice_j0() as i64;
        let twice_upsilon = 2 * self.max_spin().0 as i64 - twice_j0;
        if heaviside(twice_upsilon) == 1 {
            twice_upsilon as u64
        } else {
            (twice_j0 % 2) as u64
        }
    }

    /// `Π (2j_α + 1)^{N_α}`.
    pub fn total_dimension(&self) -> BigInt {
        self.entries.iter().fold(BigInt::one(), |acc, (s, &n)| {
            acc * num_traits::pow(BigInt::from(s.dimension()), n as usize)
        })
    }

    /// Number of distinct coupled spins, `J₀ - J_m + 1`.
    pub fn distinct_j_count(&self) -> u64 {
        (self.twice_j0() - self.twice_jmin()) / 2 + 1
    }
}

impl fmt::Display for SpinMultiset {
    /// Canonical form: ascending spins, caret multiplicities, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (spin, mult)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{spin}")?;
            if mult != 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SpinMultiset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_spins(text)
    }
}

/// Parses the spin grammar, e.g. `"1/2^2,1^4"`.
pub fn parse_spins(text: &str) -> Result<SpinMultiset> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(text, "empty spin specification"));
    }
    let mut pairs = Vec::new();
    for item in compact.split(',') {
        pairs.push(parse_item(item)?);
    }
    SpinMultiset::new(pairs)
}

fn parse_item(item: &str) -> Result<(u64, u64)> {
    if item.is_empty() {
        return Err(Error::parse(item, "empty item"));
    }
    let (spin, mult) = match item.split_once('^') {
        Some((spin, mult)) => {
            let m = parse_uint(mult).ok_or_else(|| Error::parse(item, "malformed multiplicity"))?;
            if m == 0 {
                return Err(Error::parse(item, "multiplicity must be positive"));
            }
            (spin, m)
        }
        None => (item, 1),
    };
    let twice = parse_twice_spin(spin).map_err(|e| match e {
        Error::Parse { reason, .. } => Error::parse(item, reason),
        other => other,
    })?;
    Ok((twice, mult))
}

/// Parses a single spin (`"3"`, `"5/2"`) into twice-spin units.
pub fn parse_twice_spin(spin: &str) -> Result<u64> {
    let spin = spin.trim();
    let twice = match spin.split_once('/') {
        Some((num, den)) => {
            if den != "2" {
                return Err(Error::parse(spin, "denominator must be 2"));
            }
            let num = parse_uint(num).ok_or_else(|| Error::parse(spin, "malformed spin"))?;
            if num % 2 == 0 {
                return Err(Error::parse(spin, "numerator over 2 must be odd"));
            }
            num
        }
        None => {
            let j = parse_uint(spin).ok_or_else(|| Error::parse(spin, "malformed spin"))?;
            j.checked_mul(2)
                .ok_or_else(|| Error::parse(spin, "spin too large"))?
        }
    };
    if twice == 0 {
        return Err(Error::parse(spin, "spin 0 is not allowed"));
    }
    Ok(twice)
}

fn parse_uint(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u64, u64)]) -> SpinMultiset {
        SpinMultiset::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(parse_spins("1/2^2,1^4").unwrap(), ms(&[(1, 2), (2, 4)]));
        assert_eq!(parse_spins("1/2").unwrap(), ms(&[(1, 1)]));
        assert_eq!(parse_spins("3/2^2, 5/2").unwrap(), ms(&[(3, 2), (5, 1)]));
        assert_eq!(parse_spins(" 1 ^ 3 ").unwrap(), ms(&[(2, 3)]));
        assert_eq!(parse_spins("1,1").unwrap(), ms(&[(2, 2)]));
    }

    #[test]
    fn parse_errors_name_the_token() {
        for (bad, token) in [
            ("0", "0"),
            ("1^0", "1^0"),
            ("", ""),
            ("2/2", "2/2"),
            ("1/3", "1/3"),
            ("a", "a"),
            ("1,,2", ""),
            ("1^x", "1^x"),
            ("-1", "-1"),
        ] {
            match parse_spins(bad) {
                Err(Error::Parse { token: t, .. }) => assert_eq!(t, token, "input {bad:?}"),
                other => panic!("{bad:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_rendering() {
        let a = parse_spins("1^4, 1/2^2").unwrap();
        assert_eq!(a.to_string(), "1/2^2,1^4");
        assert_eq!(parse_spins("5/2,3/2^2").unwrap().to_string(), "3/2^2,5/2");
    }

    #[test]
    fn extremal_spins() {
        let a = ms(&[(1, 2), (2, 4)]);
        assert_eq!(a.twice_j0(), 10);
        assert_eq!(a.twice_jmin(), 0);
        assert_eq!(a.total_dimension(), BigInt::from(324));
        assert_eq!(a.distinct_j_count(), 6);

        assert_eq!(ms(&[(1, 1)]).twice_j0(), 1);
        assert_eq!(ms(&[(5, 3)]).twice_j0(), 15);
        assert_eq!(ms(&[(1, 3)]).twice_jmin(), 1);
        assert_eq!(ms(&[(6, 1), (1, 1)]).twice_jmin(), 5);
        assert_eq!(ms(&[(1, 1)]).total_dimension(), BigInt::from(2));
        assert_eq!(ms(&[(3, 10)]).total_dimension(), BigInt::from(1_048_576));
        assert_eq!(ms(&[(1, 1)]).distinct_j_count(), 1);
        assert_eq!(ms(&[(2, 2)]).distinct_j_count(), 3);
    }

    #[test]
    fn heaviside_at_zero_is_one() {
        assert_eq!(heaviside(0), 1);
        assert_eq!(heaviside(-1), 0);
        // upsilon = 0: spin 1 with two spin-1/2
        assert_eq!(ms(&[(2, 1), (1, 2)]).twice_jmin(), 0);
    }
}
