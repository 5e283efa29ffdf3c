use proptest::prelude::*;

use super::random::random_quiver;
use super::*;
use crate::scalar::Scalar;
use crate::Rat;

fn quiver(text: &str) -> QuiverInput {
    parse_quiver_json(text).unwrap()
}

fn poly(anti: bool, terms: &[(u32, u32, i64)]) -> SkewBivarPoly<Rat> {
    let mut p = SkewBivarPoly::zero(anti);
    for &(a, b, c) in terms {
        p.add_term(a, b, Rat::from_int(c));
    }
    p
}

#[test]
fn folded_path_gives_rank_two_datum() {
    let d = builtin("b01").unwrap();
    assert_eq!(d.nodes, vec!["e", "o"]);
    assert_eq!(d.sym, vec![2, 1]);
    assert_eq!(d.parity, vec![0, 1]);
    assert_eq!(d.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
    assert_eq!(d.edge_orbits, vec![vec![0, 1], vec![0, 0]]);
    assert_eq!(d.q_poly::<Rat>(0, 1), poly(false, &[(1, 0, -1), (0, 2, 1)]));
    assert_eq!(d.q_poly::<Rat>(1, 0), poly(false, &[(2, 0, 1), (0, 1, -1)]));
}

#[test]
fn numeric_vertex_ids_order_numerically() {
    let d = RootDatum::from_quiver(&quiver(
        r#"{"vertices": [1, 2, 3], "edges": [[1, 2], [3, 2]], "automorphism": {"1": 3, "3": 1},
            "parity": {"2": 1, "1": 0}}"#,
    ))
    .unwrap();
    assert_eq!(d.nodes, vec!["1", "2"]);
    assert_eq!(d.sym, vec![2, 1]);
    assert_eq!(d.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
    let ten = RootDatum::from_quiver(&quiver(
        r#"{"vertices": ["10", "9"], "edges": [["10", "9"], ["10", "9"]], "parity": {"9": 1, "10": 1}}"#,
    ))
    .unwrap();
    assert_eq!(ten.nodes, vec!["9", "10"]);
}

#[test]
fn odd_singleton() {
    let d = builtin("osp12").unwrap();
    assert_eq!(d.cartan_matrix(), vec![vec![2]]);
    assert_eq!(d.sym, vec![1]);
    assert_eq!(d.nodes_of_parity(1), vec![0]);
    assert!(d.q_poly::<Rat>(0, 0).is_zero());
    assert!(d.check_q_conditions().is_empty());
}

#[test]
fn odd_edge_between_odd_nodes_violates_c4() {
    let err = RootDatum::from_quiver(&quiver(
        r#"{"vertices": ["x", "y"], "edges": [["x", "y"]], "parity": {"x": 1, "y": 1}}"#,
    ))
    .unwrap_err();
    assert!(matches!(err, RootDataError::C4Violation(_)), "{err}");
}

#[test]
fn structural_rejections() {
    let loop_in_orbit = quiver(
        r#"{"vertices": ["a", "b"], "edges": [["a", "b"]], "automorphism": {"a": "b", "b": "a"}, "parity": {"a": 1}}"#,
    );
    assert!(matches!(RootDatum::from_quiver(&loop_in_orbit), Err(RootDataError::IncompatibleAutomorphism(_))));
    let not_equivariant = quiver(
        r#"{"vertices": ["a", "b", "c"], "edges": [["a", "c"]], "automorphism": {"a": "b", "b": "a"},
            "parity": {"a": 0, "c": 1}}"#,
    );
    assert!(matches!(RootDatum::from_quiver(&not_equivariant), Err(RootDataError::IncompatibleAutomorphism(_))));
    let swaps_components = quiver(
        r#"{"vertices": ["a", "b"], "edges": [], "automorphism": {"a": "b", "b": "a"}, "parity": {"a": 1}}"#,
    );
    assert!(matches!(RootDatum::from_quiver(&swaps_components), Err(RootDataError::IncompatibleAutomorphism(_))));
    let wrong_parity = quiver(r#"{"vertices": ["a"], "edges": [], "parity": {"a": 0}}"#);
    assert!(matches!(RootDatum::from_quiver(&wrong_parity), Err(RootDataError::C6Violation(_))));
    let missing = quiver(r#"{"vertices": ["a", "b"], "edges": [["a", "b"], ["a", "b"]], "parity": {"a": 1}}"#);
    assert!(matches!(RootDatum::from_quiver(&missing), Err(RootDataError::InvalidInput(_))));
}

#[test]
fn gcd_is_checked() {
    let d = RootDatum::from_parts_unchecked(
        "even",
        vec!["a".into()],
        vec![0],
        vec![2],
        vec![vec![4]],
        vec![vec![0]],
    );
    assert!(d.violations().contains(&RootDataError::GcdNotOne(2)));
}

#[test]
fn builtins_are_valid_and_satisfy_q_conditions() {
    for d in all_builtins() {
        assert!(d.violations().is_empty(), "{}", d.name);
        assert!(d.check_q_conditions().is_empty(), "{}", d.name);
    }
}

#[test]
fn builtin_q_polynomials() {
    let a11 = builtin("aff-a11").unwrap();
    assert_eq!(a11.edge_orbits[0][1], 2);
    assert_eq!(a11.q_poly::<Rat>(0, 1), poly(true, &[(2, 0, 1), (0, 2, 1)]));
    let a22 = builtin("aff-a22").unwrap();
    assert_eq!(a22.cartan_matrix(), vec![vec![2, -4], vec![-1, 2]]);
    assert_eq!(a22.q_poly::<Rat>(0, 1), poly(false, &[(4, 0, 1), (0, 1, -1)]));
    let c = builtin("aff-c").unwrap();
    assert_eq!(c.sym, vec![1, 2, 4]);
    assert_eq!(c.cartan_matrix(), vec![vec![2, -2, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
}

#[test]
fn p_matrix_splits_by_order() {
    let d = builtin("b01").unwrap();
    assert!(d.p_poly::<Rat>(0, 0).is_zero());
    assert_eq!(d.p_poly::<Rat>(0, 1), d.q_poly::<Rat>(0, 1));
    assert_eq!(d.p_poly::<Rat>(1, 0), SkewBivarPoly::one(false));
}

/// Odd node with even symmetrizer: a C6 violation that survives C4.
pub(crate) fn c6_counterexample() -> RootDatum {
    RootDatum::from_parts_unchecked(
        "c6-violating",
        vec!["i".into(), "j".into()],
        vec![1, 0],
        vec![2, 1],
        vec![vec![4, -4], vec![-4, 2]],
        vec![vec![0, 2], vec![0, 0]],
    )
}

#[test]
fn c6_violation_breaks_clause_d() {
    let d = c6_counterexample();
    assert!(d.violations().iter().all(|e| matches!(e, RootDataError::C6Violation(_))));
    let clauses: Vec<char> = d.check_q_conditions().iter().map(|v| v.clause).collect();
    assert_eq!(clauses, vec!['d']);
    let as_quiver = quiver(
        r#"{"vertices": ["i1", "i2", "j"], "edges": [["i1", "j"], ["i1", "j"], ["i2", "j"], ["i2", "j"]],
            "automorphism": {"i1": "i2", "i2": "i1"}, "parity": {"i1": 1, "j": 0}}"#,
    );
    assert!(matches!(RootDatum::from_quiver(&as_quiver), Err(RootDataError::C6Violation(_))));
}

#[test]
fn sequences_are_enumerated_lexicographically() {
    assert_eq!(enumerate_sequences(&Weight(vec![1, 0])), vec![vec![0]]);
    assert_eq!(enumerate_sequences(&Weight(vec![1, 1])), vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(enumerate_sequences(&Weight(vec![2, 1])), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    assert_eq!(enumerate_sequences(&Weight(vec![2, 2, 1])).len(), 30);
    assert_eq!(enumerate_sequences(&Weight(vec![0, 0])), vec![Vec::<usize>::new()]);
}

#[test]
fn weight_parsing() {
    let d = builtin("b01").unwrap();
    assert_eq!(Weight::parse(&d, "e:2,o:1").unwrap(), Weight(vec![2, 1]));
    assert_eq!(Weight::parse(&d, "odd:3").unwrap(), Weight(vec![0, 3]));
    assert_eq!(Weight::parse(&d, "e,e,o").unwrap(), Weight(vec![2, 1]));
    assert!(Weight::parse(&d, "x:1").is_err());
    assert!(Weight::parse(&d, "e:z").is_err());
    assert_eq!(Weight::all_of_height(2, 2), vec![Weight(vec![2, 0]), Weight(vec![1, 1]), Weight(vec![0, 2])]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_quivers_give_valid_data(seed in any::<u64>()) {
        let (_, d) = random_quiver(seed);
        let n = d.rank();
        for i in 0..n {
            prop_assert_eq!(d.cartan(i, i), 2);
            for j in 0..n {
                if i != j {
                    prop_assert!(d.cartan(i, j) <= 0);
                    prop_assert_eq!(d.cartan(i, j) == 0, d.cartan(j, i) == 0);
                    prop_assert_eq!(d.sym[i] as i64 * d.cartan(i, j), d.sym[j] as i64 * d.cartan(j, i));
                    let lhs = (d.edge_orbits[i][j] + d.edge_orbits[j][i]) as i64 * d.lcm_norm(i, j) as i64;
                    prop_assert_eq!(lhs, -2 * d.pairing[i][j]);
                }
            }
        }
        prop_assert!(d.check_q_conditions().is_empty());
    }
}
