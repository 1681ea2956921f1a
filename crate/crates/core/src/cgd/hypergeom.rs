//! Terminating generalized hypergeometric series `pFq(a; b; 1)` in exact
//! arithmetic, and the univariate multiplicity formulas written in that form.
//!
//! A series terminates at the first upper parameter that is a nonpositive
//! integer `-M`; the sum then runs over `s = 0..=M`. The last index is fixed
//! from the full parameter list when the series is built, so cancelling an
//! equal upper/lower pair later never changes where the sum stops.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{binomial_general, ExactField};
use crate::Rational;

/// `pFq(uppers; lowers; 1)` with a known last term.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminatingSeries<F> {
    uppers: Vec<F>,
    lowers: Vec<F>,
    last_index: u64,
}

impl<F: ExactField> TerminatingSeries<F> {
    pub fn new(uppers: Vec<F>, lowers: Vec<F>) -> Result<Self> {
        let last_index = uppers
            .iter()
            .filter_map(|a| a.as_nonpositive_integer())
            .min()
            .ok_or_else(|| {
                Error::Domain("series does not terminate: no nonpositive integer upper parameter".into())
            })?;
        Ok(TerminatingSeries {
            uppers,
            lowers,
            last_index,
        })
    }

    pub fn uppers(&self) -> &[F] {
        &self.uppers
    }

    pub fn lowers(&self) -> &[F] {
        &self.lowers
    }

    /// Index of the last (possibly) nonzero term.
    pub fn last_index(&self) -> u64 {
        self.last_index
    }

    /// `(p, q)` of `pFq`.
    pub fn order(&self) -> (usize, usize) {
        (self.uppers.len(), self.lowers.len())
    }

    /// Removes every upper/lower pair with equal values and returns how many
    /// pairs were dropped.
    pub fn cancel_pairs(&mut self) -> usize {
        let mut removed = 0;
        let mut i = 0;
        while i < self.uppers.len() {
            if let Some(j) = self.lowers.iter().position(|b| *b == self.uppers[i]) {
                self.uppers.remove(i);
                self.lowers.remove(j);
                removed += 1;
            } else {
                i += 1;
            }
        }
        removed
    }

    /// Sums the series through the term-ratio recurrence
    /// `t_{s+1} / t_s = Π (a + s) / (Π (b + s) · (s + 1))`.
    pub fn evaluate(&self) -> Result<F> {
        let mut term = F::one();
        let mut sum = F::one();
        for s in 0..self.last_index {
            let shift = F::from_i64(s as i64);
            let mut numer = F::one();
            for a in &self.uppers {
                numer = numer * (a.clone() + shift.clone());
            }
            let mut denom = F::from_i64(s as i64 + 1);
            for b in &self.lowers {
                let factor = b.clone() + shift.clone();
                if factor.is_zero() {
                    return Err(Error::DivisionByZero {
                        parameter: format!("{b:?}"),
                        index: s,
                    });
                }
                denom = denom * factor;
            }
            term = term * numer / denom;
            if term.is_zero() {
                break;
            }
            sum = sum + term.clone();
        }
        Ok(sum)
    }
}

/// Cancels equal upper/lower pairs, then sums the terminating series.
pub fn eval_terminating_pfq<F: ExactField>(uppers: Vec<F>, lowers: Vec<F>) -> Result<F> {
    let mut series = TerminatingSeries::new(uppers, lowers)?;
    series.cancel_pairs();
    series.evaluate()
}

/// A binomial prefactor times a terminating series.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSeries {
    pub prefactor: BigInt,
    pub series: TerminatingSeries<Rational>,
}

impl ScaledSeries {
    pub fn evaluate(&self) -> Result<Rational> {
        Ok(Rational::from_integer(self.prefactor.clone()) * self.series.evaluate()?)
    }

    /// Cancels pairs and evaluates; the value is returned as an integer when
    /// the result is integral.
    pub fn reduce_and_evaluate(mut self) -> Result<Rational> {
        self.series.cancel_pairs();
        self.evaluate()
    }
}

fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Index pairs `(i', i)` with `i' - i = offset` and `0 <= i, i' <= 2j`.
/// With `offset = N - 1` these label the removable parameter pairs of the
/// `Ω` series; with `offset = N - 2` those of the `λ` series.
pub fn reduction_pairs(twice_j: u64, offset: i64) -> Vec<(u64, u64)> {
    (0..=twice_j)
        .filter_map(|i| {
            let ip = i as i64 + offset;
            (0..=twice_j as i64).contains(&ip).then_some((ip as u64, i))
        })
        .collect()
}

// Shared shape of the univariate Ω and λ series: kernel C(x - d s, r) with
// x = N + n - 1 - shift and r = N - 1 - shift.
fn univariate_series(twice_j: u64, count: u64, n: i64, kernel_shift: i64) -> Result<ScaledSeries> {
    if twice_j == 0 || count == 0 {
        return Err(Error::Domain("univariate series needs 2j >= 1 and N >= 1".into()));
    }
    if n < 0 {
        return Err(Error::Domain(format!("index must be nonnegative, got {n}")));
    }
    let d = twice_j as i64 + 1;
    let big_n = count as i64;
    let top = big_n + n - 1 - kernel_shift;
    let mut uppers = vec![Rational::from_integer(BigInt::from(-big_n))];
    uppers.extend((0..d).map(|i| frac(-(n - i), d)));
    let lowers = (0..d).map(|ip| frac(-(top - ip), d)).collect();
    Ok(ScaledSeries {
        prefactor: binomial_general(top, n),
        series: TerminatingSeries::new(uppers, lowers)?,
    })
}

/// `Ω` of `N` spin-`j` as `C(N+n-1, n) · F(-N, -n/d, ..., -(n-2j)/d; -(N+n-1)/d, ..., -(N+n-1-2j)/d; 1)`
/// with `d = 2j + 1`.
pub fn omega_univariate_series(twice_j: u64, count: u64, n: i64) -> Result<ScaledSeries> {
    univariate_series(twice_j, count, n, 0)
}

/// `λ` of `N` spin-`j` as `C(N+κ-2, κ) · F(-N, -κ/d, ...; -(N+κ-2)/d, ...; 1)`.
pub fn lambda_univariate_series(twice_j: u64, count: u64, kappa: i64) -> Result<ScaledSeries> {
    univariate_series(twice_j, count, kappa, 1)
}

/// `C_ν = C(3ν-2, ν) · 3F2(-2ν, -ν/2, -(ν-1)/2; -(3ν-2)/2, -(3ν-3)/2; 1)`.
pub fn catalan_series(nu: u64) -> Result<ScaledSeries> {
    let v = nu as i64;
    Ok(ScaledSeries {
        prefactor: binomial_general(3 * v - 2, v),
        series: TerminatingSeries::new(
            vec![frac(-2 * v, 1), frac(-v, 2), frac(-(v - 1), 2)],
            vec![frac(-(3 * v - 2), 2), frac(-(3 * v - 3), 2)],
        )?,
    })
}

/// `R_ν = C(2ν-2, ν) · 4F3(-ν, -ν/3, -(ν-1)/3, -(ν-2)/3; -(2ν-2)/3, -(2ν-3)/3, -(2ν-4)/3; 1)`.
pub fn riordan_series(nu: u64) -> Result<ScaledSeries> {
    let v = nu as i64;
    Ok(ScaledSeries {
        prefactor: binomial_general(2 * v - 2, v),
        series: TerminatingSeries::new(
            vec![frac(-v, 1), frac(-v, 3), frac(-(v - 1), 3), frac(-(v - 2), 3)],
            vec![frac(-(2 * v - 2), 3), frac(-(2 * v - 3), 3), frac(-(2 * v - 4), 3)],
        )?,
    })
}

/// Integer value of an exact rational known to be integral.
pub fn to_integer(value: &Rational) -> Result<BigInt> {
    if value.denom().is_one() {
        Ok(value.numer().clone())
    } else {
        Err(Error::Internal(format!("expected an integer, got {value}")))
    }
}
