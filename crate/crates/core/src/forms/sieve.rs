//! Range representability by sumset sieving: the value set of a form below a
//! bound is the iterated sumset of each term's value list, built with
//! shift-or over 64-bit words.

use super::MixedForm;

/// Fixed-length bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] |= 1 << (i % 64);
        }
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        if shift >= self.len {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        let n = self.words.len();
        for i in (ws..n).rev() {
            let src = i - ws;
            let mut w = other.words.get(src).copied().unwrap_or(0) << bs;
            if bs > 0 && src > 0 {
                w |= other.words.get(src - 1).copied().unwrap_or(0) >> (64 - bs);
            }
            self.words[i] |= w;
        }
        self.trim();
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// The set `{v₁ + … + v_k ≤ bound : vᵢ ∈ lists[i]}` as a bitset of length
/// `bound + 1`. Values above `bound` are ignored.
pub fn sumset_upto(lists: &[Vec<u64>], bound: u64) -> BitSet {
    let len = bound as usize + 1;
    let mut acc = BitSet::new(len);
    acc.set(0);
    for list in lists {
        let mut next = BitSet::new(len);
        for &v in list.iter().filter(|&&v| v <= bound) {
            next.or_shifted(&acc, v as usize);
        }
        acc = next;
    }
    acc
}

/// `out[n]` is true iff `form` represents `n`, for every `n ≤ bound`.
pub fn representable_upto(form: &MixedForm, bound: u64) -> Vec<bool> {
    let lists: Vec<Vec<u64>> = form.terms().iter().map(|t| t.values_upto(bound)).collect();
    sumset_upto(&lists, bound).to_bools()
}

/// All `n ≤ bound` not represented by `form`, ascending.
pub fn exceptions(form: &MixedForm, bound: u64) -> Vec<u64> {
    misses(&representable_upto(form, bound))
}

pub(crate) fn misses(rep: &[bool]) -> Vec<u64> {
    rep.iter()
        .enumerate()
        .filter(|(_, &r)| !r)
        .map(|(n, _)| n as u64)
        .collect()
}

/// Least `n ≤ bound` represented by exactly one of the two forms.
pub fn value_sets_equal_up_to(f: &MixedForm, g: &MixedForm, bound: u64) -> Option<u64> {
    let a = representable_upto(f, bound);
    let b = representable_upto(g, bound);
    a.iter().zip(&b).position(|(x, y)| x != y).map(|n| n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{is_representable, Term};
    use proptest::prelude::*;

    fn f(s: &str) -> MixedForm {
        s.parse().unwrap()
    }

    #[test]
    fn bitset_shift_or_matches_naive() {
        let mut base = BitSet::new(300);
        for i in [0, 1, 5, 63, 64, 65, 127, 200, 299] {
            base.set(i);
        }
        for shift in [0, 1, 7, 63, 64, 65, 128, 250, 299, 300, 1000] {
            let mut out = BitSet::new(300);
            out.or_shifted(&base, shift);
            for i in 0..300 {
                let expect = i >= shift && base.get(i - shift);
                assert_eq!(out.get(i), expect, "shift {shift} bit {i}");
            }
        }
    }

    #[test]
    fn exceptions_examples() {
        assert_eq!(exceptions(&f("s+2s+3t"), 10_000), vec![23]);
        assert_eq!(exceptions(&f("s+6s+t"), 10_000), vec![47]);
        assert!(exceptions(&f("s+t+t"), 1000).is_empty());
        assert_eq!(exceptions(&f("s+s+s"), 30), vec![7, 15, 23, 28]);
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(
            value_sets_equal_up_to(&f("4s+s+2t"), &f("4s+t+t"), 5000),
            None
        );
        assert_eq!(
            value_sets_equal_up_to(&f("s+2t+t"), &f("t+t+t"), 5000),
            None
        );
        assert_eq!(
            value_sets_equal_up_to(&f("s+t+t"), &f("s+5s+t"), 100),
            Some(13)
        );
    }

    #[test]
    fn zero_bound() {
        assert_eq!(representable_upto(&f("s+t+t"), 0), vec![true]);
        assert!(exceptions(&f("5s+5s+5t"), 0).is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sieve_agrees_with_exhaustive_search(
            coeffs in [1u64..12, 1u64..12, 1u64..12],
            kinds in [any::<bool>(), any::<bool>(), any::<bool>()],
            bound in 0u64..500,
        ) {
            let terms = [0, 1, 2].map(|i| if kinds[i] { Term::square(coeffs[i]) } else { Term::triangular(coeffs[i]) });
            let form = MixedForm::new(terms).unwrap();
            let rep = representable_upto(&form, bound);
            prop_assert_eq!(rep.len() as u64, bound + 1);
            for (n, &r) in rep.iter().enumerate() {
                prop_assert_eq!(r, is_representable(&form, n as u64), "n = {}", n);
            }
        }
    }
}
