//! Dense polynomials in `q`, q-analogues and Gaussian polynomials.

mod partitions;

pub use partitions::{
    partitions_at_most, phi, phi2_closed, restricted_partitions, sum_phi_equals_p,
    PartitionCounter,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::IntPolynomial;

/// Polynomial `c0 + c1 q + c2 q^2 + ...` with dense coefficients.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }

    /// `c · q^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, the coefficient sum.
    pub fn eval_at_one(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |a, c| a + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Schoolbook convolution.
    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// `self^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| f(self.coeff(i), other.coeff(i))).collect())
    }

    /// Exact division by a divisor whose leading coefficient is one.
    /// Returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        if !lead.is_one() {
            return Err(Error::Internal("divisor is not monic".into()));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Coefficient + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().cloned().map(|c| -c).collect())
    }
}

impl<T: Coefficient + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    /// `c0 + c1 q + c2 q^2 + ...`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 if show_coeff => f.write_str(" q")?,
                1 => f.write_str("q")?,
                _ if show_coeff => write!(f, " q^{k}")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    /// Coefficients as decimal strings, for JSON output.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_analogue<T: Coefficient>(n: u64) -> Polynomial<T> {
    Polynomial::new(vec![T::one(); n as usize])
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`; `[0]_q! = 1`.
pub fn q_factorial<T: Coefficient>(n: u64) -> Polynomial<T> {
    (1..=n).fold(Polynomial::one(), |acc, k| acc.mul_ref(&q_analogue(k)))
}

/// Gaussian polynomial `[a choose b]_q`, built row by row with the q-Pascal
/// rule `[a, b] = [a-1, b] + q^{a-b} [a-1, b-1]`. Zero for `b < 0` or `b > a`.
pub fn q_binomial<T: Coefficient>(a: u64, b: i64) -> Polynomial<T> {
    if b < 0 || b as u64 > a {
        return Polynomial::zero();
    }
    let b = b as usize;
    // row[k] holds [r choose k] for the current row r, k = 0..=b
    let mut row: Vec<Polynomial<T>> = vec![Polynomial::zero(); b + 1];
    row[0] = Polynomial::one();
    for r in 1..=a as usize {
        for k in (1..=b.min(r)).rev() {
            let shifted = row[k - 1].shift(r - k);
            row[k] = &row[k] + &shifted;
        }
    }
    let out = row.swap_remove(b);
    if cfg!(debug_assertions) && a <= 24 {
        assert_eq!(
            Ok(&out),
            q_binomial_by_division::<T>(a, b as i64).as_ref(),
            "q-Pascal and division routes disagree"
        );
    }
    out
}

/// `[a]_q! / ([b]_q! [a-b]_q!)` by exact polynomial division. A nonzero
/// remainder is reported as an internal error.
pub fn q_binomial_by_division<T: Coefficient>(a: u64, b: i64) -> Result<Polynomial<T>> {
    if b < 0 || b as u64 > a {
        return Ok(Polynomial::zero());
    }
    let b = b as u64;
    let numerator = q_factorial::<T>(a);
    let denominator = q_factorial::<T>(b).mul_ref(&q_factorial(a - b));
    let (quot, rem) = numerator.div_rem_monic(&denominator)?;
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "q-factorial division for [{a} choose {b}] left a remainder"
        )));
    }
    Ok(quot)
}

/// Gaussian polynomial from the nested-sum expansion
/// `1 + Σ q^{m1} + ΣΣ q^{m1+m2} + ...` of depth `b`, with
/// `a-b >= m1 >= m2 >= ... >= 1`.
pub fn q_binomial_convolution(a: u64, b: u64) -> Result<IntPolynomial> {
    if b > a {
        return Err(Error::Domain(format!(
            "convolution expansion needs a >= b, got a={a}, b={b}"
        )));
    }
    let width = (a - b) as usize;
    let mut coeffs = vec![BigInt::zero(); width * b as usize + 1];
    coeffs[0] = BigInt::one();
    if width > 0 {
        nested_sums(&mut coeffs, b as usize, width, 0);
    }
    Ok(Polynomial::new(coeffs))
}

// Adds q^{partial + m} for every m in 1..=bound, then descends one level with
// the new bound m. `depth` is the number of levels still open.
fn nested_sums(coeffs: &mut [BigInt], depth: usize, bound: usize, partial: usize) {
    if depth == 0 {
        return;
    }
    for m in 1..=bound {
        coeffs[partial + m] += 1;
        nested_sums(coeffs, depth - 1, m, partial + m);
    }
}
