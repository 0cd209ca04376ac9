//! Truncated integer power series in `q`.
//!
//! A series of order `N` stores the coefficients of `q⁰ … q^N`. Every
//! operation truncates at `N` and every coefficient operation is checked, so
//! an overflow is an error rather than a wrong answer.

mod identities;

pub use identities::Identity;

use crate::arith::triangular;
use crate::error::{Error, Result};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// Panics on an empty vector; a series has at least the constant term.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [i64] {
        &mut self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &Self, op: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow("series coefficient")))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn scale(&self, factor: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                a.checked_mul(factor)
                    .ok_or(Error::Overflow("series coefficient"))
            })
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    fn nonzero(&self) -> Vec<(usize, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    /// Least index where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coefficient(k) != other.coefficient(k))
    }
}

/// `φ(q) = Σ_{n∈ℤ} q^{n²}` to order `n`.
pub fn phi(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    s.coeffs[0] = 1;
    for k in (1..).map(|k: usize| k * k).take_while(|&sq| sq <= order) {
        s.coeffs[k] = 2;
    }
    s
}

/// `ψ(q) = Σ_{n≥0} q^{t_n}` to order `n`.
pub fn psi(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for t in (0..)
        .map(|k: usize| k * (k + 1) / 2)
        .take_while(|&t| t <= order)
    {
        s.coeffs[t] = 1;
    }
    s
}

const CHUNK: usize = 4096;

/// Truncated Cauchy product. The operand with fewer nonzero coefficients
/// drives the loop, so theta-like sparse factors cost `O(nnz · N)`.
pub fn multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_order(b)?;
    let (sparse, dense) = {
        let (na, nb) = (a.nonzero(), b.nonzero());
        if na.len() <= nb.len() {
            (na, b)
        } else {
            (nb, a)
        }
    };
    let mut out = TruncatedSeries::zero(a.order());
    out.coeffs
        .par_chunks_mut(CHUNK)
        .enumerate()
        .try_for_each(|(ci, chunk)| -> Result<()> {
            let start = ci * CHUNK;
            let end = start + chunk.len();
            for &(i, ai) in &sparse {
                if i >= end {
                    break;
                }
                let lo = start.max(i);
                for k in lo..end {
                    let term = ai
                        .checked_mul(dense.coeffs[k - i])
                        .ok_or(Error::Overflow("series multiply"))?;
                    let slot = &mut chunk[k - start];
                    *slot = slot
                        .checked_add(term)
                        .ok_or(Error::Overflow("series multiply"))?;
                }
            }
            Ok(())
        })?;
    Ok(out)
}

/// `q → -q`: odd-index coefficients change sign.
pub fn negate_q(s: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
        .collect();
    TruncatedSeries { coeffs }
}

/// `q → q^k`, truncated at the original order.
pub fn substitute_power(s: &TruncatedSeries, k: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "substitute_power needs k >= 1".into(),
        ));
    }
    let mut out = TruncatedSeries::zero(s.order());
    for (i, &c) in s.coeffs.iter().enumerate() {
        match i.checked_mul(k) {
            Some(j) if j <= s.order() => out.coeffs[j] = c,
            _ => break,
        }
    }
    Ok(out)
}

/// One family `∏_{n ≥ 1, n ≡ residue (mod modulus)} (1 - qⁿ)^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerFactor {
    pub modulus: usize,
    pub residue: usize,
    pub exponent: u32,
}

impl EulerFactor {
    pub const fn new(modulus: usize, residue: usize, exponent: u32) -> Self {
        EulerFactor {
            modulus,
            residue,
            exponent,
        }
    }
}

/// Expansion of the product of all factor families to order `order`.
///
/// Uses the logarithmic derivative: with `P = ∏ (1 - qⁿ)^{e_n}` and
/// `b_k = Σ_{n | k} n·e_n`, the coefficients satisfy
/// `k·p_k = -Σ_{j=1..k} b_j·p_{k-j}`. Only coefficients of the full product
/// are ever stored, so partial products (whose coefficients can be huge even
/// when the final ones are small) never appear.
pub fn restricted_euler_product(factors: &[EulerFactor], order: usize) -> Result<TruncatedSeries> {
    let overflow = || Error::Overflow("euler product");
    let mut b = vec![0i64; order + 1];
    for f in factors {
        if f.modulus == 0 {
            return Err(Error::InvalidArgument(
                "euler factor modulus must be positive".into(),
            ));
        }
        let first = match f.residue % f.modulus {
            0 => f.modulus,
            r => r,
        };
        for n in (first..=order).step_by(f.modulus) {
            let w = (n as i64)
                .checked_mul(f.exponent as i64)
                .ok_or_else(overflow)?;
            for k in (n..=order).step_by(n) {
                b[k] = b[k].checked_add(w).ok_or_else(overflow)?;
            }
        }
    }
    let mut s = TruncatedSeries::one(order);
    let mut support = vec![0usize];
    for k in 1..=order {
        let mut acc: i128 = 0;
        for &i in &support {
            acc += b[k - i] as i128 * s.coeffs[i] as i128;
        }
        let k128 = k as i128;
        debug_assert_eq!(acc % k128, 0, "log-derivative recurrence is exact");
        let c = i64::try_from(-acc / k128).map_err(|_| overflow())?;
        if c != 0 {
            s.coeffs[k] = c;
            support.push(k);
        }
    }
    Ok(s)
}

/// `Σ_{m≥0} (-1)^m (2m+1) q^{scale · t_m}` to order `order`.
pub fn signed_odd_theta(order: usize, scale: usize) -> Result<TruncatedSeries> {
    if scale == 0 {
        return Err(Error::InvalidArgument(
            "signed_odd_theta needs scale >= 1".into(),
        ));
    }
    let mut s = TruncatedSeries::zero(order);
    for m in 0i64.. {
        let idx = (triangular(m)? as usize)
            .checked_mul(scale)
            .ok_or(Error::Overflow("signed_odd_theta"))?;
        if idx > order {
            break;
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        s.coeffs[idx] = sign * (2 * m + 1);
    }
    Ok(s)
}
