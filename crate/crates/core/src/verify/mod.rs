//! Named, parameterized checks that tie the counting, search and series code
//! to specific claims, each producing a [`VerificationReport`].
//!
//! Checks are methods on [`Toolkit`], a table of the primitive counters they
//! rely on. [`Toolkit::standard`] wires in the real implementations; tests
//! swap single entries for corrupted variants to confirm each check notices.
//!
//! Non-representability findings are exact (exhaustive finite search).
//! Universality, equivalence and conjecture findings only hold up to the
//! bound recorded in the report, which is why they end as
//! [`Status::BoundedPass`] rather than [`Status::Pass`].

pub mod catalog;
mod checks;
mod report;

pub use report::{ReportBuilder, Status, VerificationReport, Witness};

use crate::counts;
use crate::error::{Error, Result};
use crate::forms::{self, MixedForm, ParityCounts};
use crate::series::{self, TruncatedSeries};
use std::fmt;
use std::str::FromStr;

/// The primitives every check is built from.
#[derive(Clone, Copy)]
pub struct Toolkit {
    pub parity_split: fn(&MixedForm, usize, u64) -> Result<ParityCounts>,
    pub representable_upto: fn(&MixedForm, u64) -> Vec<bool>,
    pub is_representable: fn(&MixedForm, u64) -> bool,
    pub r3: fn(u64) -> u64,
    pub hurwitz: fn(u64) -> Result<u64>,
    pub phi: fn(usize) -> TruncatedSeries,
    pub psi: fn(usize) -> TruncatedSeries,
}

impl Toolkit {
    pub fn standard() -> Self {
        Toolkit {
            parity_split: forms::parity_split_count,
            representable_upto: forms::representable_upto,
            is_representable: forms::is_representable,
            r3: counts::r3_bruteforce,
            hurwitz: counts::hurwitz_count,
            phi: series::phi,
            psi: series::psi,
        }
    }
}

impl Default for Toolkit {
    fn default() -> Self {
        Self::standard()
    }
}

/// Bounds for every check. The defaults reproduce the published claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub series_order: usize,
    pub hurwitz_odd: u64,
    pub theorem1i: u64,
    pub theorem1ii: u64,
    /// Largest `m`; the scan covers `n ≤ t_m`.
    pub theorem1iii_m: u64,
    pub rep_bound: u64,
    pub essential: u64,
    pub conjecture1: u64,
    pub conjecture23: u64,
    pub dickson: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            series_order: 20_000,
            hurwitz_odd: 99,
            theorem1i: 10_000,
            theorem1ii: 5_000,
            // t_140 = 9870 is the last triangular number ≤ 10000
            theorem1iii_m: 140,
            rep_bound: 2_000,
            essential: 10_000,
            conjecture1: 15_000,
            conjecture23: 10_000,
            dickson: 5_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckName {
    Identities,
    Hurwitz,
    Theorem1i,
    Theorem1ii,
    Theorem1iii,
    Classifications,
    EssentialForms,
    Conjectures,
    DicksonChain,
    WitnessRegistry,
}

impl CheckName {
    /// The order `verify all` runs in. The witness registry is part of
    /// `classifications` and only runs on its own when asked.
    pub const ALL: [CheckName; 9] = [
        CheckName::Identities,
        CheckName::Hurwitz,
        CheckName::Theorem1i,
        CheckName::Theorem1ii,
        CheckName::Theorem1iii,
        CheckName::Classifications,
        CheckName::EssentialForms,
        CheckName::Conjectures,
        CheckName::DicksonChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Identities => "identities",
            CheckName::Hurwitz => "hurwitz",
            CheckName::Theorem1i => "theorem1i",
            CheckName::Theorem1ii => "theorem1ii",
            CheckName::Theorem1iii => "theorem1iii",
            CheckName::Classifications => "classifications",
            CheckName::EssentialForms => "essential_forms",
            CheckName::Conjectures => "conjectures",
            CheckName::DicksonChain => "dickson_chain",
            CheckName::WitnessRegistry => "witness_registry",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .chain([CheckName::WitnessRegistry])
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

impl Toolkit {
    pub fn run(&self, check: CheckName, bounds: &Bounds) -> Result<VerificationReport> {
        match check {
            CheckName::Identities => self.check_identities(bounds.series_order),
            CheckName::Hurwitz => self.check_hurwitz(bounds.hurwitz_odd),
            CheckName::Theorem1i => self.check_theorem1i(bounds.theorem1i),
            CheckName::Theorem1ii => self.check_theorem1ii(bounds.theorem1ii),
            CheckName::Theorem1iii => self.check_theorem1iii(bounds.theorem1iii_m),
            CheckName::Classifications => self.check_classifications(bounds.rep_bound),
            CheckName::EssentialForms => self.check_essential_forms(bounds.essential),
            CheckName::Conjectures => {
                self.scan_conjectures(bounds.conjecture1, bounds.conjecture23)
            }
            CheckName::DicksonChain => self.check_dickson_chain(bounds.dickson),
            CheckName::WitnessRegistry => Ok(self.check_witness_registry()),
        }
    }
}

pub fn check_identities(order: usize) -> Result<VerificationReport> {
    Toolkit::standard().check_identities(order)
}

pub fn check_hurwitz(odd_bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_hurwitz(odd_bound)
}

pub fn check_theorem1i(bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_theorem1i(bound)
}

pub fn check_theorem1ii(bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_theorem1ii(bound)
}

pub fn check_theorem1iii(m_bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_theorem1iii(m_bound)
}

pub fn check_classifications(rep_bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_classifications(rep_bound)
}

pub fn check_essential_forms(bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_essential_forms(bound)
}

pub fn scan_conjectures(
    conjecture1_bound: u64,
    conjecture23_bound: u64,
) -> Result<VerificationReport> {
    Toolkit::standard().scan_conjectures(conjecture1_bound, conjecture23_bound)
}

pub fn check_dickson_chain(bound: u64) -> Result<VerificationReport> {
    Toolkit::standard().check_dickson_chain(bound)
}

pub fn check_witness_registry() -> VerificationReport {
    Toolkit::standard().check_witness_registry()
}
