use proptest::prelude::*;

use wlp_core::bounds::{hf_polynomial_ring, sigma};
use wlp_core::constructions::{construct_failing_ideal, five_var_aci, WitnessKind};
use wlp_core::hilbert::hilbert_table;
use wlp_core::inverse::{in_inverse_system, Polynomial};
use wlp_core::monomial::{enumerate_monomials, Monomial, MonomialIdeal, Permutation};
use wlp_core::wlp::{wlp_report, WlpOptions};

/// Artinian ideal: all pure powers plus a random subset of mixed monomials.
fn artinian(max_n: usize, max_d: u32) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_n, 2..=max_d).prop_flat_map(|(n, d)| {
        let mixed: Vec<Monomial> = enumerate_monomials(n, d).into_iter().filter(|m| m.pure_power_var().is_none()).collect();
        let k = mixed.len();
        (Just(n), Just(d), Just(mixed), proptest::collection::vec(any::<bool>(), k))
    })
    .prop_map(|(n, d, mixed, pick)| {
        let extra = mixed.into_iter().zip(pick).filter(|(_, p)| *p).map(|(m, _)| m);
        MonomialIdeal::complete_intersection(n, d).with_generators(extra).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(ideal in artinian(5, 4)) {
        let back = MonomialIdeal::parse_in(&ideal.to_text(), Some(ideal.nvars())).unwrap();
        prop_assert_eq!(back, ideal);
    }

    #[test]
    fn relabeling_preserves_hilbert_and_verdict((ideal, perm) in artinian(4, 3).prop_flat_map(|i| { let n = i.nvars(); (Just(i), permutation(n)) })) {
        let moved = ideal.permuted(&perm).unwrap();
        prop_assert_eq!(hilbert_table(&ideal).unwrap(), hilbert_table(&moved).unwrap());
        let a = wlp_report(&ideal, WlpOptions::certified()).unwrap();
        let b = wlp_report(&moved, WlpOptions::certified()).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.failing_degrees, b.failing_degrees);
    }

    #[test]
    fn hilbert_total_is_standard_monomial_count(ideal in artinian(4, 4)) {
        let h = hilbert_table(&ideal).unwrap();
        prop_assert_eq!(h.get(0), 1);
        prop_assert_eq!(h.get(1), ideal.nvars() as u64);
        prop_assert_eq!(h.get(ideal.degree() as i64), hf_polynomial_ring(ideal.nvars() as u32, ideal.degree()) - ideal.num_generators() as u64);
    }
}

#[test]
fn complete_intersections_have_the_wlp() {
    for n in 1..=4 {
        for d in 1..=5 {
            let ci = MonomialIdeal::complete_intersection(n, d);
            assert!(wlp_report(&ci, WlpOptions::certified()).unwrap().has_wlp(), "n={n} d={d}");
        }
    }
}

#[test]
fn constructions_have_the_requested_shape() {
    for n in 3..=6u32 {
        for d in 2..=5u32 {
            for mu in sigma(n, d).unwrap().iter().step_by(7) {
                let r = construct_failing_ideal(n, d, mu).unwrap();
                assert!(r.ideal.is_artinian());
                assert_eq!((r.ideal.nvars() as u32, r.ideal.degree(), r.ideal.num_generators() as u64), (n, d, mu));
            }
        }
    }
}

#[test]
fn odd_degree_five_variable_dual_formula_is_not_a_member() {
    // (X1-X2)^s (X3-X4)^(d-1) with s = floor((3d-3)/2) >= d contains X1^s,
    // which x1^d kills; the failure rests on the computed primal element
    for d in [5u32, 7] {
        let r = five_var_aci(d).unwrap();
        let s = (3 * d - 3) / 2;
        let f = Polynomial::difference(5, 0, 1).pow(s).mul(&Polynomial::difference(5, 2, 3).pow(d - 1));
        assert!(!in_inverse_system(&r.ideal, &f, true));
        let primal = r.witnesses.iter().find(|w| w.kind == WitnessKind::Primal).unwrap();
        assert!(primal.holds_for(&r.ideal));
        assert_eq!(primal.failure_degree(), r.expected_failure.map(|e| e.degree));
    }
}
