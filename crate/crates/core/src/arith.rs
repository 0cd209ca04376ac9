//! Elementary number-theoretic primitives: triangular numbers, square roots,
//! trial-division factorization, three-square admissibility and the divisor sum.
//!
//! Everything here is exact 64-bit integer arithmetic. Results that would not
//! fit report [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

/// `k(k+1)/2` for any integer `k`. Negative indices fold onto naturals since
/// `t(-k-1) = t(k)`.
pub fn triangular(k: i64) -> Result<u64> {
    // k(k+1) >= 0 for every integer k
    let k = k as i128;
    let t = k * (k + 1) / 2;
    u64::try_from(t).map_err(|_| Error::Overflow("triangular"))
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// Returns `Some(r)` when `n = r²`.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Returns `m` with `t(m) = n`, if `n` is triangular.
pub fn triangular_index(n: u64) -> Option<u64> {
    let disc = 8 * n as u128 + 1;
    let root = disc.isqrt();
    if root * root != disc {
        return None;
    }
    // root is odd whenever root² ≡ 1 (mod 8)
    Some(((root - 1) / 2) as u64)
}

/// Largest index `k ≥ 0` with `coefficient · t(k) ≤ n`.
pub fn max_triangular_index(n: u64, coefficient: u64) -> u64 {
    debug_assert!(coefficient > 0);
    let q = n / coefficient;
    let root = (8 * q as u128 + 1).isqrt();
    ((root - 1) / 2) as u64
}

/// Largest `k ≥ 0` with `coefficient · k² ≤ n`.
pub fn max_square_index(n: u64, coefficient: u64) -> u64 {
    debug_assert!(coefficient > 0);
    isqrt(n / coefficient)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn value(&self) -> Result<u64> {
        self.prime
            .checked_pow(self.exponent)
            .ok_or(Error::Overflow("prime power"))
    }
}

/// Prime factorization with primes in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|f| f.prime)
    }

    /// Number of positive divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.exponent) + 1)
            .product()
    }
}

/// Deterministic trial division up to `√n`. `factorize(1)` has no factors.
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push(PrimePower {
                prime: p,
                exponent: e,
            });
        }
    };
    push(2, &mut rest);
    let mut d = 3u64;
    while d <= rest / d {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        factors.push(PrimePower {
            prime: rest,
            exponent: 1,
        });
    }
    Factorization { n, factors }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.factors.len() == 1 && f.factors[0].exponent == 1
}

/// Gauss–Legendre: `n` is a sum of three squares iff it is not `4^k(8l+7)`.
pub fn three_square_admissible(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut m = n;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 != 7
}

/// Split of an odd integer into the part free of primes `≡ 3 (mod 4)` and the
/// prime powers `≡ 3 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSplit {
    pub n0: u64,
    pub bad: Vec<PrimePower>,
}

pub fn odd_split(n: u64) -> Result<OddSplit> {
    if n.is_multiple_of(2) {
        return Err(Error::NotOdd(n));
    }
    let mut n0 = 1u64;
    let mut bad = Vec::new();
    for pp in factorize(n).factors {
        if pp.prime % 4 == 3 {
            bad.push(pp);
        } else {
            n0 *= pp.value()?;
        }
    }
    Ok(OddSplit { n0, bad })
}

/// Sum of positive divisors, multiplicatively from the factorization.
pub fn sigma(f: &Factorization) -> Result<u64> {
    let mut total = 1u64;
    for pp in &f.factors {
        // 1 + p + ... + p^e by repeated multiply-add
        let mut term = 1u64;
        let mut power = 1u64;
        for _ in 0..pp.exponent {
            power = power
                .checked_mul(pp.prime)
                .ok_or(Error::Overflow("sigma"))?;
            term = term.checked_add(power).ok_or(Error::Overflow("sigma"))?;
        }
        total = total.checked_mul(term).ok_or(Error::Overflow("sigma"))?;
    }
    Ok(total)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
