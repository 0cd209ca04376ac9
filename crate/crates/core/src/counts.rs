//! Named counting functions: `r`, `r₀`, `r₁` for `x² + t_y + t_z`, three-square
//! counts, the closed form for points on the sphere of odd radius, and the
//! small auxiliary counts the identity checks compare against.

use crate::arith::{factorize, isqrt, max_triangular_index, odd_split, triangular_index};
use crate::error::{Error, Result};
use crate::forms::{for_each_representation, parity_split_count, MixedForm, ParityCounts, Term};

/// `x² + t_y + t_z`, slot 0 is the square.
pub const SQUARE_TWO_TRIANGULAR: [Term; 3] =
    [Term::square(1), Term::triangular(1), Term::triangular(1)];

/// `x² + y² + t_z`.
pub const TWO_SQUARES_TRIANGULAR: [Term; 3] =
    [Term::square(1), Term::square(1), Term::triangular(1)];

pub fn square_two_triangular() -> MixedForm {
    MixedForm::new(SQUARE_TWO_TRIANGULAR).expect("positive coefficients")
}

pub fn two_squares_triangular() -> MixedForm {
    MixedForm::new(TWO_SQUARES_TRIANGULAR).expect("positive coefficients")
}

/// `(r(n), r₀(n), r₁(n))` as total / even / odd by parity of `x`.
pub fn r_split(n: u64) -> ParityCounts {
    parity_split_count(&square_two_triangular(), 0, n).expect("slot 0 is a square")
}

pub fn r(n: u64) -> u64 {
    r_split(n).total
}

pub fn r0(n: u64) -> u64 {
    r_split(n).even
}

pub fn r1(n: u64) -> u64 {
    r_split(n).odd
}

/// Representations of `n` by `x² + y² + t_z` split by whether `x ≡ y (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairParity {
    pub same: u64,
    pub mixed: u64,
}

pub fn two_squares_triangular_parity(n: u64) -> PairParity {
    let mut p = PairParity { same: 0, mixed: 0 };
    for_each_representation(&two_squares_triangular(), n, |t| {
        if (t.0[0] - t.0[1]) % 2 == 0 {
            p.same += 1;
        } else {
            p.mixed += 1;
        }
    });
    p
}

/// `|{(x,y,z) ∈ ℤ³ : x²+y²+z² = n}|`, walking `0 ≤ x ≤ y ≤ z` and unfolding
/// each orbit under sign changes and permutations.
pub fn r3_bruteforce(n: u64) -> u64 {
    let mut total = 0;
    let mut x = 0u64;
    while 3 * x * x <= n {
        let mut y = x;
        while x * x + 2 * y * y <= n {
            let rest = n - x * x - y * y;
            let z = isqrt(rest);
            if z * z == rest && z >= y {
                let signs = 1u64 << [x, y, z].iter().filter(|&&v| v != 0).count();
                let perms = match (x == y, y == z) {
                    (true, true) => 1,
                    (true, false) | (false, true) => 3,
                    (false, false) => 6,
                };
                total += signs * perms;
            }
            y += 1;
        }
        x += 1;
    }
    total
}

/// Plain triple loop over `[-√n, √n]³`; reference for [`r3_bruteforce`].
pub fn r3_naive(n: u64) -> u64 {
    let r = isqrt(n) as i64;
    let mut count = 0;
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                if (x * x + y * y + z * z) as u64 == n {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Closed form for `|{x²+y²+z² = n²}|`, `n` odd:
/// `6 n₀ ∏ (pᵅ + 2(pᵅ - 1)/(p - 1))` over the prime powers `pᵅ ∥ n` with
/// `p ≡ 3 (mod 4)`.
pub fn hurwitz_count(n: u64) -> Result<u64> {
    let split = odd_split(n)?;
    let overflow = || Error::Overflow("hurwitz_count");
    let mut total = 6u64.checked_mul(split.n0).ok_or_else(overflow)?;
    for pp in &split.bad {
        let full = pp.value()?;
        // (p^α - 1)/(p - 1) = 1 + p + … + p^{α-1}
        let mut geometric = 0u64;
        let mut power = 1u64;
        for _ in 0..pp.exponent {
            geometric = geometric.checked_add(power).ok_or_else(overflow)?;
            power = power.checked_mul(pp.prime).ok_or_else(overflow)?;
        }
        let factor = geometric
            .checked_mul(2)
            .and_then(|g| g.checked_add(full))
            .ok_or_else(overflow)?;
        total = total.checked_mul(factor).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// All `(x, y)` with `x > 0`, `y ≥ 0`, `x² + y² = n`, ascending by `x`.
pub fn two_square_reps(n: u64) -> Vec<(u64, u64)> {
    (1..=isqrt(n))
        .filter_map(|x| {
            let rest = n - x * x;
            let y = isqrt(rest);
            (y * y == rest).then_some((x, y))
        })
        .collect()
}

/// For odd `n > 0` whose primes are all `≡ 1 (mod 4)`: the number of
/// representations from [`two_square_reps`] next to the divisor count of `n`.
/// `None` when the hypothesis fails, in which case nothing is claimed.
pub fn two_square_divisor_comparison(n: u64) -> Option<(u64, u64)> {
    if n == 0 || n.is_multiple_of(2) {
        return None;
    }
    let f = factorize(n);
    if f.primes().any(|p| p % 4 != 1) {
        return None;
    }
    Some((two_square_reps(n).len() as u64, f.divisor_count()))
}

/// `|{(y, z) ∈ ℕ² : t_y + t_z = n}|`.
pub fn triangular_pair_count(n: u64) -> u64 {
    (0..=max_triangular_index(n, 1))
        .filter(|&y| triangular_index(n - y * (y + 1) / 2).is_some())
        .count() as u64
}

/// `|{(y, z) ∈ ℤ × ℕ : y² + 2t_z = n}|`.
pub fn square_double_triangular_count(n: u64) -> u64 {
    (0..=isqrt(n))
        .map(|y| {
            let rest = n - y * y;
            match rest.is_multiple_of(2) && triangular_index(rest / 2).is_some() {
                true if y == 0 => 1,
                true => 2,
                false => 0,
            }
        })
        .sum()
}
