//! Mixed ternary forms `a·□ + b·□ + c·□` where every slot is either a square
//! of an integer or a triangular number.
//!
//! Square slots range over all integers (both signs are counted). Triangular
//! slots range over naturals only: `t(-k-1) = t(k)`, so the natural index is
//! the canonical representative and nothing is counted twice.

mod eliminate;
mod notation;
mod sieve;

pub use eliminate::{eliminate, eliminate_with, CoefficientOrder, Elimination, EliminationConfig};
pub use notation::ParseError;
pub use sieve::{exceptions, representable_upto, sumset_upto, value_sets_equal_up_to, BitSet};

use crate::arith::{
    exact_sqrt, max_square_index, max_triangular_index, triangular, triangular_index,
};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TermKind {
    Square,
    Triangular,
}

impl TermKind {
    pub fn marker(self) -> char {
        match self {
            TermKind::Square => 's',
            TermKind::Triangular => 't',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coefficient: u64,
    pub kind: TermKind,
}

impl Term {
    pub const fn square(coefficient: u64) -> Self {
        Term {
            coefficient,
            kind: TermKind::Square,
        }
    }

    pub const fn triangular(coefficient: u64) -> Self {
        Term {
            coefficient,
            kind: TermKind::Triangular,
        }
    }

    /// Contribution of this term at a given index.
    pub fn value(&self, index: i64) -> Result<u64> {
        let base = match self.kind {
            TermKind::Square => {
                let m = index.unsigned_abs();
                m.checked_mul(m).ok_or(Error::Overflow("square term"))?
            }
            TermKind::Triangular => triangular(index)?,
        };
        base.checked_mul(self.coefficient)
            .ok_or(Error::Overflow("term coefficient"))
    }

    /// Largest natural index whose contribution does not exceed `n`.
    pub fn max_index(&self, n: u64) -> u64 {
        match self.kind {
            TermKind::Square => max_square_index(n, self.coefficient),
            TermKind::Triangular => max_triangular_index(n, self.coefficient),
        }
    }

    /// All values `≤ bound` taken by this term, ascending, without repeats.
    pub fn values_upto(&self, bound: u64) -> Vec<u64> {
        (0..=self.max_index(bound))
            .map(|k| self.value_nat(k))
            .collect()
    }

    fn value_nat(&self, k: u64) -> u64 {
        let base = match self.kind {
            TermKind::Square => k * k,
            TermKind::Triangular => k * (k + 1) / 2,
        };
        base * self.coefficient
    }

    /// Number of domain indices mapping to the natural magnitude `k`.
    fn multiplicity(&self, k: u64) -> u64 {
        match self.kind {
            TermKind::Square if k > 0 => 2,
            _ => 1,
        }
    }

    /// The natural magnitude `k` with `value(k) = target`, if any.
    fn solve(&self, target: u64) -> Option<u64> {
        if !target.is_multiple_of(self.coefficient) {
            return None;
        }
        let q = target / self.coefficient;
        match self.kind {
            TermKind::Square => exact_sqrt(q),
            TermKind::Triangular => triangular_index(q),
        }
    }
}

/// Three ordered terms with positive coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedForm {
    terms: [Term; 3],
}

impl MixedForm {
    pub fn new(terms: [Term; 3]) -> Result<Self> {
        if terms.iter().any(|t| t.coefficient == 0) {
            return Err(Error::ZeroCoefficient);
        }
        Ok(MixedForm { terms })
    }

    pub fn from_pattern(kinds: [TermKind; 3], coefficients: [u64; 3]) -> Result<Self> {
        Self::new([0, 1, 2].map(|i| Term {
            coefficient: coefficients[i],
            kind: kinds[i],
        }))
    }

    pub fn terms(&self) -> &[Term; 3] {
        &self.terms
    }

    pub fn coefficients(&self) -> [u64; 3] {
        self.terms.map(|t| t.coefficient)
    }

    pub fn kinds(&self) -> [TermKind; 3] {
        self.terms.map(|t| t.kind)
    }

    /// The same form with its terms reordered: slot `i` of the result is slot
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        MixedForm {
            terms: perm.map(|i| self.terms[i]),
        }
    }
}

/// One index per slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepTriple(pub [i64; 3]);

/// Representation count of `n` split by the parity of one square slot's index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityCounts {
    pub n: u64,
    pub total: u64,
    pub even: u64,
    pub odd: u64,
}

impl ParityCounts {
    pub fn difference(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

pub fn evaluate(form: &MixedForm, triple: &RepTriple) -> Result<u64> {
    let mut sum = 0u64;
    for (slot, (term, &index)) in form.terms.iter().zip(&triple.0).enumerate() {
        if term.kind == TermKind::Triangular && index < 0 {
            return Err(Error::NegativeTriangularIndex { slot, index });
        }
        sum = sum
            .checked_add(term.value(index)?)
            .ok_or(Error::Overflow("evaluate"))?;
    }
    Ok(sum)
}

/// Visits every representation of `n` by natural magnitudes, with the number
/// of signed triples each magnitude triple stands for.
fn visit_magnitudes(form: &MixedForm, n: u64, mut f: impl FnMut([u64; 3], u64)) {
    let [t0, t1, t2] = form.terms;
    for k0 in 0..=t0.max_index(n) {
        let r0 = n - t0.value_nat(k0);
        for k1 in 0..=t1.max_index(r0) {
            let r1 = r0 - t1.value_nat(k1);
            if let Some(k2) = t2.solve(r1) {
                let mult = t0.multiplicity(k0) * t1.multiplicity(k1) * t2.multiplicity(k2);
                f([k0, k1, k2], mult);
            }
        }
    }
}

/// Calls `f` once per representation of `n`, with signed square indices
/// expanded.
pub fn for_each_representation(form: &MixedForm, n: u64, mut f: impl FnMut(RepTriple)) {
    let signs = |term: &Term, k: u64| -> Vec<i64> {
        if term.kind == TermKind::Square && k > 0 {
            vec![k as i64, -(k as i64)]
        } else {
            vec![k as i64]
        }
    };
    visit_magnitudes(form, n, |ks, _| {
        for a in signs(&form.terms[0], ks[0]) {
            for b in signs(&form.terms[1], ks[1]) {
                for c in signs(&form.terms[2], ks[2]) {
                    f(RepTriple([a, b, c]));
                }
            }
        }
    });
}

/// Exhaustive search over the finite index box; stops at the first hit.
pub fn is_representable(form: &MixedForm, n: u64) -> bool {
    let [t0, t1, t2] = form.terms;
    (0..=t0.max_index(n)).any(|k0| {
        let r0 = n - t0.value_nat(k0);
        (0..=t1.max_index(r0)).any(|k1| t2.solve(r0 - t1.value_nat(k1)).is_some())
    })
}

/// Finds one representation of `n`, if any.
pub fn find_representation(form: &MixedForm, n: u64) -> Option<RepTriple> {
    let mut found = None;
    visit_magnitudes(form, n, |ks, _| {
        if found.is_none() {
            found = Some(RepTriple(ks.map(|k| k as i64)));
        }
    });
    found
}

pub fn count_representations(form: &MixedForm, n: u64) -> Result<u64> {
    let mut total = 0u64;
    let mut overflow = false;
    visit_magnitudes(form, n, |_, mult| match total.checked_add(mult) {
        Some(t) => total = t,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow("count_representations"));
    }
    Ok(total)
}

pub fn parity_split_count(form: &MixedForm, slot: usize, n: u64) -> Result<ParityCounts> {
    let term = form.terms.get(slot).ok_or(Error::SlotOutOfRange(slot))?;
    if term.kind != TermKind::Square {
        return Err(Error::NotSquareSlot(slot));
    }
    let (mut even, mut odd) = (0u64, 0u64);
    // ±k share parity, so the multiplicity goes to one bucket
    visit_magnitudes(form, n, |ks, mult| {
        if ks[slot] % 2 == 0 {
            even += mult;
        } else {
            odd += mult;
        }
    });
    Ok(ParityCounts {
        n,
        total: even + odd,
        even,
        odd,
    })
}
