//! Brute-force oracles shared by the integration tests. They use nothing from
//! the library beyond form parsing, so agreement with the library is evidence
//! rather than tautology.

#![allow(dead_code)]

use mixedrep::forms::{MixedForm, TermKind};

pub fn tri(k: u64) -> u64 {
    k * (k + 1) / 2
}

pub fn is_tri(n: u64) -> bool {
    (0..).map(tri).take_while(|&t| t <= n).any(|t| t == n)
}

pub fn form(s: &str) -> MixedForm {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Distinct values `c·k²` or `c·t_k` (k ≥ 0) up to `bound`.
fn term_values(kind: TermKind, c: u64, bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 0.. {
        let v = c * match kind {
            TermKind::Square => k * k,
            TermKind::Triangular => tri(k),
        };
        if v > bound {
            break;
        }
        out.push(v);
    }
    out
}

/// Representability of every `n ≤ bound` by plain triple loops.
pub fn representable(f: &MixedForm, bound: u64) -> Vec<bool> {
    let vals: Vec<Vec<u64>> = f
        .kinds()
        .iter()
        .zip(f.coefficients())
        .map(|(&k, c)| term_values(k, c, bound))
        .collect();
    let mut hit = vec![false; bound as usize + 1];
    for &a in &vals[0] {
        for &b in vals[1].iter().take_while(|&&b| a + b <= bound) {
            for &c in vals[2].iter().take_while(|&&c| a + b + c <= bound) {
                hit[(a + b + c) as usize] = true;
            }
        }
    }
    hit
}

pub fn misses(f: &MixedForm, bound: u64) -> Vec<u64> {
    representable(f, bound)
        .iter()
        .enumerate()
        .filter(|(_, &r)| !r)
        .map(|(n, _)| n as u64)
        .collect()
}

/// `(r0, r1)` for `x² + t_y + t_z = n`, `x ∈ ℤ`, `y, z ∈ ℕ`, split by parity of `x`.
pub fn r_parity(n: u64) -> (u64, u64) {
    let (mut even, mut odd) = (0, 0);
    let mut x: i64 = 0;
    while (x * x) as u64 <= n {
        let rest = n - (x * x) as u64;
        let mut y = 0;
        while tri(y) <= rest {
            if is_tri(rest - tri(y)) {
                let w = if x == 0 { 1 } else { 2 };
                if x % 2 == 0 {
                    even += w;
                } else {
                    odd += w;
                }
            }
            y += 1;
        }
        x += 1;
    }
    (even, odd)
}

/// Lattice points on `x² + y² + z² = n`.
pub fn r3(n: u64) -> u64 {
    let mut count = 0;
    let r = (n as f64).sqrt() as i64 + 1;
    for x in -r..=r {
        for y in -r..=r {
            let rest = n as i64 - x * x - y * y;
            if rest < 0 {
                continue;
            }
            let z = (rest as f64).sqrt().round() as i64;
            if z * z == rest {
                count += if z == 0 { 1 } else { 2 };
            }
        }
    }
    count
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
