use ladder_core::closed_form::{lplus, matrix, qplus, resistance, MatrixKind};
use ladder_core::export::{
    format_rational, matrix_to_csv, matrix_to_json, parse_matrix_csv, parse_matrix_json,
    parse_rational,
};
use ladder_core::graph::{
    build_graph, columns_sum_to_zero, cyclic_shift, incidence_matrix, is_automorphism,
    laplacian_matrix, parse_edge_list_json,
};
use ladder_core::linalg::matrix_tree_count;
use ladder_core::sequences::{
    binet_matches, check_identity, seq_terms, seq_value, IdentityId, SeqKind,
};
use ladder_core::verify::verify_spec;
use ladder_core::{Family, FamilySpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

fn spec_up_to(max_n: usize) -> impl Strategy<Value = FamilySpec> {
    family().prop_flat_map(move |f| {
        (f.min_n()..=max_n).prop_map(move |n| FamilySpec::new(f, n).unwrap())
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (any::<i64>(), 1..i64::MAX).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn binet_form_is_the_recurrence(n in 0usize..=200) {
        prop_assert!(binet_matches(SeqKind::A, n));
        prop_assert!(binet_matches(SeqKind::S, n));
    }

    #[test]
    fn sequences_increase_strictly(n in 1usize..=200) {
        prop_assert!(seq_value(SeqKind::A, n + 1) > seq_value(SeqKind::A, n));
        prop_assert!(seq_value(SeqKind::S, n) > seq_value(SeqKind::S, n - 1));
    }

    #[test]
    fn identities_hold(n in 0usize..=200, k_seed in any::<usize>()) {
        for id in IdentityId::ALL {
            let cases = id.cases(n);
            if cases.is_empty() {
                prop_assert!(check_identity(id, n, Some(n + 1)).is_err());
                continue;
            }
            let k = cases[k_seed % cases.len()];
            prop_assert!(check_identity(id, n, k).unwrap(), "{} at n={} k={:?}", id, n, k);
        }
    }

    #[test]
    fn ladder_tree_count_is_s(n in 1usize..=24) {
        let g = build_graph(&FamilySpec::new(Family::Ladder, n).unwrap()).unwrap();
        prop_assert_eq!(matrix_tree_count(&g).unwrap(), seq_value(SeqKind::S, n));
    }

    #[test]
    fn rational_text_round_trips(v in rational()) {
        let text = format_rational(&v);
        prop_assert_eq!(parse_rational(&text).unwrap(), v);
    }

    #[test]
    fn json_round_trip_is_byte_exact(spec in spec_up_to(9), k in 0usize..5) {
        let r = matrix(&spec, MatrixKind::ALL[k]).unwrap();
        let text = matrix_to_json(&r);
        prop_assert_eq!(matrix_to_json(&parse_matrix_json(&text).unwrap()), text);
        let csv = matrix_to_csv(&r.matrix, false);
        prop_assert_eq!(matrix_to_csv(&parse_matrix_csv(&csv).unwrap(), false), csv);
    }

    #[test]
    fn graph_structure(spec in spec_up_to(30)) {
        let g = build_graph(&spec).unwrap();
        let q = incidence_matrix(&g);
        prop_assert!(columns_sum_to_zero(&q));
        prop_assert_eq!(q.mul(&q.transpose()).unwrap(), laplacian_matrix(&g));
        let expected_degrees: Vec<usize> = (0..2 * spec.n)
            .map(|p| {
                let i = p % spec.n;
                let path_end = spec.family == Family::Ladder && (i == 0 || i + 1 == spec.n);
                match (path_end, spec.n) {
                    (true, 1) => 1,
                    (true, _) => 2,
                    (false, _) => 3,
                }
            })
            .collect();
        prop_assert_eq!(g.degrees(), expected_degrees);
        prop_assert_eq!(parse_edge_list_json(&g.to_edge_list_json()).unwrap(), g.clone());
        if spec.family != Family::Ladder {
            prop_assert!(is_automorphism(&g, &cyclic_shift(&spec)));
        }
    }

    #[test]
    fn closed_form_shapes(spec in spec_up_to(14)) {
        let n = spec.n;
        let h = qplus(&spec).unwrap().matrix;
        prop_assert_eq!(h.shape(), (spec.edge_count(), 2 * n));
        prop_assert!(h.row_sums().iter().all(Zero::is_zero));
        let lp = lplus(&spec).unwrap().matrix;
        prop_assert!(lp.is_symmetric());
        prop_assert!(lp.row_sums().iter().all(Zero::is_zero));
        let r = resistance(&spec).unwrap().matrix;
        prop_assert!(r.is_symmetric());
        prop_assert!((0..2 * n).all(|p| r.get(p, p).is_zero()));
        prop_assert!(r.entries().all(|v| *v >= BigRational::zero()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_check_passes(spec in spec_up_to(12)) {
        let report = verify_spec(&spec).unwrap();
        prop_assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn prefixes() {
    let a: Vec<BigInt> = [1, 1, 3, 11, 41, 153].map(BigInt::from).to_vec();
    let s: Vec<BigInt> = [0, 1, 4, 15, 56, 209].map(BigInt::from).to_vec();
    assert_eq!(seq_terms(SeqKind::A, 6), a);
    assert_eq!(seq_terms(SeqKind::S, 6), s);
}
