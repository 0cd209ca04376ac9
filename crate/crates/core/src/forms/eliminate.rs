//! Finite elimination of candidate coefficient vectors: every vector in a box
//! is either refuted by its least non-representable `n ≤ rep_bound`, or
//! survives as a candidate universal form. A survivor has only passed a
//! bounded check.

use super::{representable_upto, MixedForm, TermKind};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientOrder {
    Unconstrained,
    /// `a ≤ b`
    FirstAtMostSecond,
    /// `b ≥ c`
    SecondAtLeastThird,
    /// `a ≤ b ≤ c`
    NonDecreasing,
}

impl CoefficientOrder {
    pub fn admits(self, [a, b, c]: [u64; 3]) -> bool {
        match self {
            CoefficientOrder::Unconstrained => true,
            CoefficientOrder::FirstAtMostSecond => a <= b,
            CoefficientOrder::SecondAtLeastThird => b >= c,
            CoefficientOrder::NonDecreasing => a <= b && b <= c,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CoefficientOrder::Unconstrained => "none",
            CoefficientOrder::FirstAtMostSecond => "a<=b",
            CoefficientOrder::SecondAtLeastThird => "b>=c",
            CoefficientOrder::NonDecreasing => "a<=b<=c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminationConfig {
    pub pattern: [TermKind; 3],
    /// Inclusive upper bound per slot; lower bound is 1.
    pub coefficient_box: [u64; 3],
    pub order: CoefficientOrder,
    pub rep_bound: u64,
}

impl EliminationConfig {
    pub const DEFAULT_REP_BOUND: u64 = 2000;

    pub fn candidates(&self) -> Vec<[u64; 3]> {
        let [ba, bb, bc] = self.coefficient_box;
        let mut out = Vec::new();
        for a in 1..=ba {
            for b in 1..=bb {
                for c in 1..=bc {
                    if self.order.admits([a, b, c]) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    /// Ascending lexicographically.
    pub survivors: Vec<[u64; 3]>,
    /// Eliminated vector → least non-representable `n`.
    pub witnesses: BTreeMap<[u64; 3], u64>,
    pub rep_bound: u64,
}

pub fn eliminate(config: &EliminationConfig) -> Result<Elimination> {
    eliminate_with(config, representable_upto)
}

/// Small probe bound tried before the full `rep_bound`; most candidates die
/// at tiny `n`.
const PROBE: u64 = 64;

/// As [`eliminate`], with the range representability oracle supplied.
pub fn eliminate_with(
    config: &EliminationConfig,
    representable: fn(&MixedForm, u64) -> Vec<bool>,
) -> Result<Elimination> {
    let candidates = config.candidates();
    if candidates.is_empty() {
        return Err(Error::EmptyBox);
    }
    let least_miss = |form: &MixedForm| -> Option<u64> {
        let probe = PROBE.min(config.rep_bound);
        let first = |bound| {
            representable(form, bound)
                .iter()
                .position(|r| !r)
                .map(|n| n as u64)
        };
        first(probe).or_else(|| {
            (probe < config.rep_bound)
                .then(|| first(config.rep_bound))
                .flatten()
        })
    };
    let results: Vec<([u64; 3], Option<u64>)> = candidates
        .into_par_iter()
        .map(|coeffs| {
            let form = MixedForm::from_pattern(config.pattern, coeffs)?;
            Ok((coeffs, least_miss(&form)))
        })
        .collect::<Result<_>>()?;
    let mut survivors = Vec::new();
    let mut witnesses = BTreeMap::new();
    for (coeffs, miss) in results {
        match miss {
            Some(w) => {
                witnesses.insert(coeffs, w);
            }
            None => survivors.push(coeffs),
        }
    }
    Ok(Elimination {
        survivors,
        witnesses,
        rep_bound: config.rep_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::exceptions;
    use TermKind::{Square as S, Triangular as T};

    #[test]
    fn empty_box_is_an_error() {
        let config = EliminationConfig {
            pattern: [S, S, T],
            coefficient_box: [0, 4, 4],
            order: CoefficientOrder::Unconstrained,
            rep_bound: 100,
        };
        assert_eq!(eliminate(&config), Err(Error::EmptyBox));
    }

    #[test]
    fn small_box_and_consistency_with_exceptions() {
        let config = EliminationConfig {
            pattern: [S, S, T],
            coefficient_box: [3, 6, 3],
            order: CoefficientOrder::FirstAtMostSecond,
            rep_bound: 500,
        };
        let e = eliminate(&config).unwrap();
        assert_eq!(
            e.survivors.len() + e.witnesses.len(),
            config.candidates().len()
        );
        for (&coeffs, &w) in &e.witnesses {
            let form = MixedForm::from_pattern(config.pattern, coeffs).unwrap();
            let ex = exceptions(&form, w);
            assert_eq!(ex.last(), Some(&w));
            assert_eq!(ex.len(), 1, "{coeffs:?} witness {w} is not least");
        }
        assert_eq!(e.witnesses[&[1, 5, 1]], 13);
        assert_eq!(e.witnesses[&[1, 3, 2]], 8);
        assert!(e.survivors.contains(&[1, 2, 1]));
    }

    #[test]
    fn order_constraints() {
        assert!(CoefficientOrder::FirstAtMostSecond.admits([1, 1, 9]));
        assert!(!CoefficientOrder::FirstAtMostSecond.admits([2, 1, 9]));
        assert!(CoefficientOrder::SecondAtLeastThird.admits([9, 2, 2]));
        assert!(!CoefficientOrder::NonDecreasing.admits([1, 3, 2]));
    }
}
