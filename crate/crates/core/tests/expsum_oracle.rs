use std::collections::BTreeSet;

use proptest::prelude::*;
use threeweight::expsum::{
    brute_force_s, closed_form_s, find_legacy_counterexamples, linearized_map, resolved_s,
    solve_linearized, SumKind, SumParams,
};
use threeweight::intmath::gcd;
use threeweight::report::{legacy_sweep, sum_sweep};
use threeweight::{Element, Field};

fn full_sweep(f: &Field) {
    for alpha in 1..=f.degree() {
        for r in sum_sweep(f, alpha).unwrap() {
            assert!(r.matches, "{f} alpha={alpha}: {r:?}");
        }
    }
}

#[test]
fn closed_form_matches_oracle_small_fields() {
    for e in 2..=7 {
        full_sweep(&Field::new(e).unwrap());
    }
}

#[test]
fn closed_form_matches_oracle_alternate_moduli() {
    for e in 3..=7 {
        full_sweep(&Field::alternate(e).unwrap());
    }
}

#[test]
fn closed_form_matches_oracle_e8_sampled() {
    let f = Field::new(8).unwrap();
    for alpha in 1..8 {
        for a in f.nonzero_elements().step_by(5) {
            for b in f.elements().step_by(3) {
                let p = SumParams::new(&f, alpha, a, b).unwrap();
                assert!(
                    closed_form_s(&p)
                        .unwrap()
                        .admits(brute_force_s(&p).unwrap()),
                    "{p:?}"
                );
            }
        }
    }
}

#[test]
fn values_lie_in_the_expected_spectrum() {
    // S is 0 or +-2^((e + d)/2) or +-2^(e/2 + d) depending on the branch
    for e in 4..=6u32 {
        let f = Field::new(e).unwrap();
        for alpha in 1..e {
            let d = gcd(e as u64, alpha as u64) as u32;
            let mut seen = BTreeSet::new();
            for a in f.nonzero_elements() {
                for b in f.elements() {
                    seen.insert(brute_force_s(&SumParams::new(&f, alpha, a, b).unwrap()).unwrap());
                }
            }
            let allowed: BTreeSet<i64> = if (e / d) % 2 == 1 {
                let m = 1i64 << ((e + d) / 2);
                [0, m, -m].into()
            } else {
                let small = 1i64 << (e / 2);
                let big = 1i64 << (e / 2 + d);
                [0, small, -small, big, -big].into()
            };
            assert!(seen.is_subset(&allowed), "e={e} alpha={alpha}: {seen:?}");
            assert!(seen.len() >= 2, "e={e} alpha={alpha}: {seen:?}");
        }
    }
}

#[test]
fn ambiguity_resolves_to_the_oracle() {
    // e/d odd with b != 0: magnitude known, sign left to the oracle
    let mut ambiguous = 0;
    for (e, alpha) in [(5u32, 1u32), (6, 2), (7, 3)] {
        let f = Field::new(e).unwrap();
        for a in f.nonzero_elements() {
            for b in f.elements() {
                let p = SumParams::new(&f, alpha, a, b).unwrap();
                let v = closed_form_s(&p).unwrap();
                if let SumKind::SignAmbiguous { magnitude } = v.kind {
                    ambiguous += 1;
                    let oracle = brute_force_s(&p).unwrap();
                    assert_eq!(oracle.abs(), magnitude);
                }
                assert_eq!(resolved_s(&p).unwrap(), brute_force_s(&p).unwrap());
            }
        }
    }
    assert!(ambiguous > 0);
}

#[test]
fn legacy_counterexamples_exist() {
    for (e, alpha) in [(4u32, 1u32), (6, 1), (8, 1), (8, 2), (8, 3)] {
        let f = Field::new(e).unwrap();
        let found = find_legacy_counterexamples(&f, alpha, usize::MAX).unwrap();
        assert!(!found.is_empty(), "e={e} alpha={alpha}");
        assert!(
            found.iter().all(|c| c.corrected == c.oracle),
            "e={e} alpha={alpha}"
        );
        assert!(
            found.iter().any(|c| c.legacy_wrong()),
            "e={e} alpha={alpha}"
        );
    }
}

#[test]
fn legacy_branch_empty_when_e_is_2d() {
    // residues then lie in GF(2^d), where Tr_d vanishes
    for (e, alpha) in [(4u32, 2u32), (6, 3), (8, 4)] {
        let f = Field::new(e).unwrap();
        assert!(find_legacy_counterexamples(&f, alpha, usize::MAX)
            .unwrap()
            .is_empty());
    }
}

#[test]
fn legacy_sweep_reports_failures() {
    let f = Field::new(6).unwrap();
    let records = legacy_sweep(&f, 1).unwrap();
    assert!(records.iter().any(|r| !r.matches));
    assert!(find_legacy_counterexamples(&Field::new(5).unwrap(), 1, 5).is_err());
}

#[test]
fn literal_example_values() {
    let f = Field::new(6).unwrap();
    let g = |k| f.gen_pow(k);
    let first = SumParams::new(&f, 1, g(3), g(3) + g(33)).unwrap();
    let second = SumParams::new(&f, 1, g(9), g(9) + g(36)).unwrap();
    assert_eq!(brute_force_s(&first).unwrap(), -16);
    assert_eq!(closed_form_s(&first).unwrap().exact_value(), Some(-16));
    assert_eq!(brute_force_s(&second).unwrap(), 16);
    assert_eq!(closed_form_s(&second).unwrap().exact_value(), Some(16));
}

fn linearized_case(e: u32, alpha: u32, a: u64, rhs: u64) -> Result<(), TestCaseError> {
    let f = Field::new(e).unwrap();
    let a = f.element(a % f.group_order() + 1).unwrap();
    let rhs = f.element(rhs % f.size()).unwrap();
    let sol = solve_linearized(&f, alpha, a, rhs).unwrap();
    let brute: Vec<Element> = f
        .elements()
        .filter(|&x| linearized_map(&f, alpha, a, x) == rhs)
        .collect();
    prop_assert_eq!(sol.solution_count(), brute.len() as u64);
    let mut listed: Vec<Element> = sol.solutions().collect();
    listed.sort_by_key(|x| x.bits());
    prop_assert_eq!(listed, brute);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn linearized_solutions_match_brute_force(e in 2u32..=10, alpha in 1u32..10, a: u64, rhs: u64) {
        let alpha = 1 + alpha % e;
        linearized_case(e, alpha, a, rhs)?;
    }
}
