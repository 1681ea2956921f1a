//! Restricted partitions `p(n, m, k)` and the nested-sum counts `φ`.
//!
//! `p(n, m, k)` is the number of partitions of `k` into at most `m` parts,
//! each at most `n`; it is the `q^k` coefficient of `[n+m choose m]_q`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::spinset::heaviside;
use crate::PartitionCount;

/// Memoized evaluator for `p(n, m, k)` via
/// `p(n, m, k) = p(n, m-1, k) + p(n-1, m, k-m)`.
#[derive(Debug, Default, Clone)]
pub struct PartitionCounter {
    memo: HashMap<(u64, u64, u64), BigUint>,
}

impl PartitionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64, m: u64, k: i64) -> PartitionCount {
        if k < 0 {
            return BigUint::zero();
        }
        let k = k as u64;
        let area = n.saturating_mul(m);
        if k > area {
            return BigUint::zero();
        }
        // reciprocity of the Gaussian polynomial keeps the table small
        let k = k.min(area - k);
        self.eval(n, m, k)
    }

    fn eval(&mut self, n: u64, m: u64, k: u64) -> BigUint {
        if k == 0 {
            return BigUint::one();
        }
        if n == 0 || m == 0 || k > n * m {
            return BigUint::zero();
        }
        if let Some(v) = self.memo.get(&(n, m, k)) {
            return v.clone();
        }
        let fewer_parts = self.eval(n, m - 1, k);
        let shrunk = if k >= m {
            let rest = k - m;
            let area = (n - 1) * m;
            if rest > area {
                BigUint::zero()
            } else {
                self.eval(n - 1, m, rest.min(area - rest))
            }
        } else {
            BigUint::zero()
        };
        let v = fewer_parts + shrunk;
        self.memo.insert((n, m, k), v.clone());
        v
    }
}

/// `p(n, m, k)`: partitions of `k` into at most `m` parts, each at most `n`.
pub fn restricted_partitions(n: u64, m: u64, k: i64) -> PartitionCount {
    PartitionCounter::new().get(n, m, k)
}

/// `p_N(k)`: partitions of `k` into at most `N` parts of unbounded size.
pub fn partitions_at_most(parts: u64, k: i64) -> PartitionCount {
    if k < 0 {
        return BigUint::zero();
    }
    restricted_partitions(k as u64, parts, k)
}

/// `φ^{a,b}_{ν,k}` evaluated as the nested Heaviside sums
///
/// ```text
/// Σ_{m1=1}^{a-b} Σ_{m2=1}^{m1} ... Σ_{m_{ν-1}=1}^{m_{ν-2}}
///     H(m1 + ... + m_{ν-2} + 2 m_{ν-1} - k) · H(k - 1 - m1 - ... - m_{ν-1})
/// ```
///
/// with `φ_0 = δ_{0,k}` and `φ_1 = H(a-b-k) H(k-1)`.
pub fn phi(a: i64, b: i64, nu: u64, k: i64) -> PartitionCount {
    let width = a - b;
    match nu {
        0 => BigUint::from(u64::from(k == 0)),
        1 => BigUint::from(heaviside(width - k) * heaviside(k - 1)),
        _ => {
            let mut count = 0u64;
            phi_levels(width, nu as usize - 1, k, 0, 0, &mut count);
            BigUint::from(count)
        }
    }
}

// `levels` loops remain; `partial` is the sum of the outer indices and
// `bound` the current upper limit (zero means "use a-b").
fn phi_levels(width: i64, levels: usize, k: i64, partial: i64, bound: i64, count: &mut u64) {
    let upper = if bound == 0 { width } else { bound };
    for m in 1..=upper {
        // every inner index is at least 1, and H(k-1-Σ) needs Σ <= k-1
        if partial + m + (levels as i64 - 1) > k - 1 {
            break;
        }
        if levels == 1 {
            *count += heaviside(partial + 2 * m - k) * heaviside(k - 1 - partial - m);
        } else {
            phi_levels(width, levels - 1, k, partial + m, m, count);
        }
    }
}

/// Closed form of `φ^{a,b}_{2,k}`:
///
/// * `k - 1 - ⌊(k-1)/2⌋` when `k <= a-b`,
/// * `a - b - ⌊(k-1)/2⌋` when `⌊(k-1)/2⌋ < a-b < k`,
/// * `0` otherwise.
pub fn phi2_closed(a: i64, b: i64, k: i64) -> PartitionCount {
    let width = a - b;
    let half = (k - 1).div_euclid(2);
    let v = if k <= width {
        k - 1 - half
    } else if half < width {
        width - half
    } else {
        0
    };
    BigUint::from(v.max(0) as u64)
}

/// Whether `p(a-b, b, k) = Σ_{ν=0}^{b} φ^{a,b}_{ν,k}` holds for this triple.
pub fn sum_phi_equals_p(a: i64, b: i64, k: i64) -> bool {
    if a < b || b < 0 {
        return false;
    }
    let total: BigUint = (0..=b as u64).map(|nu| phi(a, b, nu, k)).sum();
    total == restricted_partitions((a - b) as u64, b as u64, k)
}
