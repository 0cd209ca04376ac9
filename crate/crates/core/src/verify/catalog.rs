//! Fixed data the checks compare against: classification lists, refuting
//! witnesses, forms claimed universal, value-set reductions, and conjectured
//! exception sets.

use crate::forms::{CoefficientOrder, EliminationConfig, TermKind};

/// `ax² + by² + ct_z`, `a ≤ b`: the only possible universal vectors.
pub const SQUARE_SQUARE_TRIANGULAR: [[u64; 3]; 10] = [
    [1, 1, 1],
    [1, 1, 2],
    [1, 2, 1],
    [1, 2, 2],
    [1, 2, 4],
    [1, 3, 1],
    [1, 4, 1],
    [1, 4, 2],
    [1, 8, 1],
    [2, 2, 1],
];

/// `ax² + bt_y + ct_z`, `b ≥ c`.
pub const SQUARE_TRIANGULAR_TRIANGULAR: [[u64; 3]; 15] = [
    [1, 1, 1],
    [1, 2, 1],
    [1, 2, 2],
    [1, 3, 1],
    [1, 4, 1],
    [1, 4, 2],
    [1, 5, 2],
    [1, 6, 1],
    [1, 8, 1],
    [2, 1, 1],
    [2, 2, 1],
    [2, 4, 1],
    [3, 2, 1],
    [4, 1, 1],
    [4, 2, 1],
];

/// `at_x + bt_y + ct_z`, `a ≤ b ≤ c` (Liouville).
pub const TRIANGULAR_TRIANGULAR_TRIANGULAR: [[u64; 3]; 7] = [
    [1, 1, 1],
    [1, 1, 2],
    [1, 1, 4],
    [1, 1, 5],
    [1, 2, 2],
    [1, 2, 3],
    [1, 2, 4],
];

/// Form and the value it provably misses, used to refute candidates.
pub const WITNESS_REGISTRY: [(&str, u64); 16] = [
    ("s+5s+t", 13),
    ("s+6s+t", 47),
    ("s+7s+t", 20),
    ("s+3s+2t", 8),
    ("s+5s+2t", 19),
    ("s+s+3t", 6),
    ("s+2s+3t", 23),
    ("s+2s+5t", 10),
    ("2s+3s+t", 7),
    ("2s+4s+t", 20),
    ("s+3t+2t", 8),
    ("s+5t+t", 13),
    ("s+7t+t", 20),
    ("2s+3t+t", 7),
    ("3s+t+t", 8),
    ("5s+t+t", 19),
];

/// Forms claimed to represent every natural number, grouped by where the
/// claim comes from.
pub const ESSENTIAL_FORMS: [(&str, &[&str]); 4] = [
    (
        "square-square-triangular",
        &[
            "s+s+t", "s+s+2t", "s+2s+t", "s+2s+2t", "s+2s+4t", "s+4s+t", "s+4s+2t", "s+8s+t",
            "2s+2s+t",
        ],
    ),
    (
        "square-triangular-triangular",
        &[
            "s+t+t", "4s+t+t", "s+2t+t", "s+2t+2t", "s+4t+2t", "s+5t+2t", "2s+4t+t", "2s+2t+t",
            "2s+t+t", "s+4t+t",
        ],
    ),
    ("goldbach", &["s+s+2t", "s+2s+t", "s+2s+2t", "2s+2t+t"]),
    (
        "liouville",
        &[
            "t+t+t", "t+t+2t", "t+t+4t", "t+t+5t", "t+2t+2t", "t+2t+3t", "t+2t+4t",
        ],
    ),
];

/// Pairs of forms with identical value sets.
pub const EQUIVALENCES: [(&str, &str); 8] = [
    ("4s+s+2t", "4s+t+t"),
    ("s+2s+4t", "s+2t+2t"),
    ("s+2t+2t", "t+t+2t"),
    ("2s+s+2t", "2s+t+t"),
    ("s+2t+t", "t+t+t"),
    ("s+4t+2t", "t+4t+t"),
    ("s+5t+2t", "t+5t+t"),
    ("2s+4t+t", "2t+2t+t"),
];

pub const CONJECTURE_1: &str = "s+8t+t";

pub const CONJECTURE_2: [&str; 5] = ["s+3s+t", "s+3t+t", "s+6t+t", "3s+2t+t", "4s+2t+t"];

/// Forms with a single exceptional value.
pub const CONJECTURE_3: [(&str, u64); 5] = [
    ("s+2s+3t", 23),
    ("s+5s+2t", 19),
    ("5s+t+t", 19),
    ("s+6s+t", 47),
    ("2s+4s+t", 20),
];

/// The three elimination searches and the vectors each should leave.
pub fn classification_searches(
    rep_bound: u64,
) -> [(&'static str, EliminationConfig, &'static [[u64; 3]]); 3] {
    use TermKind::{Square as S, Triangular as T};
    [
        (
            "sst",
            EliminationConfig {
                pattern: [S, S, T],
                coefficient_box: [16, 16, 16],
                order: CoefficientOrder::FirstAtMostSecond,
                rep_bound,
            },
            &SQUARE_SQUARE_TRIANGULAR,
        ),
        (
            "stt",
            EliminationConfig {
                pattern: [S, T, T],
                coefficient_box: [16, 16, 16],
                order: CoefficientOrder::SecondAtLeastThird,
                rep_bound,
            },
            &SQUARE_TRIANGULAR_TRIANGULAR,
        ),
        (
            "ttt",
            EliminationConfig {
                pattern: [T, T, T],
                coefficient_box: [12, 12, 12],
                order: CoefficientOrder::NonDecreasing,
                rep_bound,
            },
            &TRIANGULAR_TRIANGULAR_TRIANGULAR,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::MixedForm;

    #[test]
    fn every_catalog_form_parses() {
        let all = WITNESS_REGISTRY
            .iter()
            .map(|(f, _)| *f)
            .chain(
                ESSENTIAL_FORMS
                    .iter()
                    .flat_map(|(_, fs)| fs.iter().copied()),
            )
            .chain(EQUIVALENCES.iter().flat_map(|(a, b)| [*a, *b]))
            .chain([CONJECTURE_1])
            .chain(CONJECTURE_2)
            .chain(CONJECTURE_3.iter().map(|(f, _)| *f));
        for f in all {
            f.parse::<MixedForm>()
                .unwrap_or_else(|e| panic!("{f}: {e}"));
        }
    }

    #[test]
    fn resolved_lists_plus_conjectures_cover_classifications() {
        let conj: Vec<&str> = CONJECTURE_2.iter().copied().chain([CONJECTURE_1]).collect();
        let mixed = |k: &str, v: [u64; 3]| match k {
            "sst" => format!("{}s+{}s+{}t", v[0], v[1], v[2]),
            _ => format!("{}s+{}t+{}t", v[0], v[1], v[2]),
        };
        let norm = |s: &str| s.parse::<MixedForm>().unwrap();
        for (kind, list, group) in [
            ("sst", &SQUARE_SQUARE_TRIANGULAR[..], 0),
            ("stt", &SQUARE_TRIANGULAR_TRIANGULAR[..], 1),
        ] {
            let resolved: Vec<MixedForm> =
                ESSENTIAL_FORMS[group].1.iter().map(|s| norm(s)).collect();
            for &v in list {
                let f = norm(&mixed(kind, v));
                let in_conj = conj.iter().any(|c| norm(c) == f);
                assert!(resolved.contains(&f) ^ in_conj, "{f}");
            }
            assert_eq!(
                resolved.len()
                    + list
                        .iter()
                        .filter(|&&v| conj.iter().any(|c| norm(c) == norm(&mixed(kind, v))))
                        .count(),
                list.len()
            );
        }
    }
}
