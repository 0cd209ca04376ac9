mod common;

use common::{form, misses, r_parity, representable};
use mixedrep::counts;
use mixedrep::forms::{self, MixedForm, ParityCounts, RepTriple};
use mixedrep::series;
use mixedrep::verify::{self, Bounds, CheckName, Status, Toolkit, Witness};
use proptest::prelude::*;

#[test]
fn reports_are_deterministic() {
    let kit = Toolkit::standard();
    let bounds = Bounds {
        series_order: 3000,
        theorem1i: 1500,
        theorem1ii: 1000,
        theorem1iii_m: 60,
        ..Bounds::default()
    };
    for c in CheckName::ALL {
        let a = kit.run(c, &bounds).unwrap();
        let b = kit.run(c, &bounds).unwrap();
        assert!(a.same_content(&b), "{c}");
    }
}

#[test]
fn thread_count_does_not_change_reports() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap();
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let a = pool.install(|| verify::check_theorem1i(3000).unwrap());
    let b = one.install(|| verify::check_theorem1i(3000).unwrap());
    assert!(a.same_content(&b));
    let a = pool.install(|| verify::check_classifications(500).unwrap());
    let b = one.install(|| verify::check_classifications(500).unwrap());
    assert!(a.same_content(&b));
}

/// Counts only representations with an odd square.
fn odd_squares_only(f: &MixedForm, slot: usize, n: u64) -> mixedrep::Result<ParityCounts> {
    let pc = forms::parity_split_count(f, slot, n)?;
    Ok(ParityCounts {
        total: pc.odd,
        even: 0,
        ..pc
    })
}

#[test]
fn odd_square_mutant_fails_theorem1i() {
    let kit = Toolkit {
        parity_split: odd_squares_only,
        ..Toolkit::standard()
    };
    let r = kit.check_theorem1i(10).unwrap();
    assert_eq!(r.status, Status::Fail);
    let ns: Vec<u64> = r
        .witnesses
        .iter()
        .map(|w| match w {
            Witness::Labeled { n, .. } => *n,
            other => panic!("{other:?}"),
        })
        .collect();
    // 0 = 0² + t_0 + t_0 is the least value needing an even square
    assert_eq!(ns.first(), Some(&0));
    assert!(ns.contains(&2));
}

#[test]
fn series_coefficients_count_representations() {
    // φ(q)²ψ(q) generates x² + y² + t_z
    let n = 600;
    let phi = series::phi(n);
    let g = series::multiply(&series::multiply(&phi, &phi).unwrap(), &series::psi(n)).unwrap();
    let f = counts::two_squares_triangular();
    for k in 0..=n as u64 {
        assert_eq!(
            g.coefficient(k as usize) as u64,
            forms::count_representations(&f, k).unwrap(),
            "n={k}"
        );
    }
}

#[test]
fn split_counts_match_oracle() {
    for n in 0..=500 {
        let pc = counts::r_split(n);
        assert_eq!((pc.even, pc.odd), r_parity(n), "n={n}");
        assert_eq!(pc.total, counts::r(n));
    }
}

#[test]
fn registry_witnesses_are_least() {
    for (f, n) in verify::catalog::WITNESS_REGISTRY {
        assert_eq!(misses(&form(f), n).first(), Some(&n), "{f}");
    }
}

proptest! {
    #[test]
    fn sieve_matches_oracle(a in 1u64..9, b in 1u64..9, c in 1u64..9, kinds in 0u8..8) {
        let k = |bit: u8| if kinds >> bit & 1 == 0 { "s" } else { "t" };
        let f = form(&format!("{a}{}+{b}{}+{c}{}", k(0), k(1), k(2)));
        prop_assert_eq!(forms::representable_upto(&f, 400), representable(&f, 400));
    }

    #[test]
    fn found_representations_evaluate_back(n in 0u64..3000) {
        let f = form("s+2s+3t");
        if let Some(t) = forms::find_representation(&f, n) {
            prop_assert_eq!(forms::evaluate(&f, &t).unwrap(), n);
        } else {
            prop_assert!(n == 23 || !representable(&f, n)[n as usize]);
        }
        prop_assert_eq!(forms::evaluate(&f, &RepTriple([0, 0, 0])).unwrap(), 0);
    }
}
