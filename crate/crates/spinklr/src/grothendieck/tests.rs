use std::collections::BTreeMap;

use num_traits::One;
use proptest::prelude::*;

use super::*;
use crate::covering::divided_norm_product;
use crate::polyrep::PolyRep;
use crate::ring::{bar, quantum_factorial, quantum_integer, series_expand, PiSeries};
use crate::rootdata::{all_builtins, builtin, enumerate_sequences, random::random_quiver};
use crate::{Pi, Rat};

fn geometric(d: &RootDatum, i: usize) -> Pi {
    (Pi::one() - Pi::monomial(d.parity[i] as i64, 2 * d.sym[i] as i32)).inv().unwrap()
}

fn node(d: &RootDatum, token: &str) -> usize {
    d.resolve_node(token).unwrap()
}

#[test]
fn simple_classes_pair_to_the_generator_norm() {
    for d in all_builtins() {
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                let got = proj_pairing::<Rat>(&d, &ProjClass::word(&[i]), &ProjClass::word(&[j]));
                if i == j {
                    assert_eq!(got.unwrap(), geometric(&d, i), "{} {i}", d.name);
                } else {
                    assert!(matches!(got, Err(GrothendieckError::WeightMismatch(..))));
                }
            }
        }
    }
}

#[test]
fn odd_square_pairing() {
    let d = builtin("osp12").unwrap();
    let base = Pi::one() - Pi::monomial(1, 2);
    let expected = &(&Pi::monomial(1, -1) * &quantum_integer::<Rat>(2, 1, 1)) / &(&base * &base);
    let oo = ProjClass::parse(&d, "oo").unwrap();
    assert_eq!(proj_pairing::<Rat>(&d, &oo, &oo).unwrap(), expected);
    // Both crossings contribute: 1 + pi q^{-2} over the polynomial factor.
    let by_hand = &(&Pi::one() + &Pi::monomial(1, -2)) / &(&base * &base);
    assert_eq!(expected, by_hand);
    let divided = ProjClass::parse(&d, "o^2").unwrap();
    assert_eq!(proj_pairing::<Rat>(&d, &divided, &divided).unwrap(), divided_norm_product::<Rat>(&d, 0, 2));
    let mixed = proj_pairing::<Rat>(&d, &divided, &oo).unwrap();
    assert_eq!(&mixed * &quantum_factorial::<Rat>(2, 1, 1), expected);
}

#[test]
fn orthogonal_nodes_swap_with_a_parity_shift() {
    let d = builtin("aff-c").unwrap();
    let (i, j) = (node(&d, "odd"), (0..d.rank()).find(|&j| d.cartan(node(&d, "odd"), j) == 0).unwrap());
    let g = &geometric(&d, i) * &geometric(&d, j);
    let (ij, ji) = (ProjClass::word(&[i, j]), ProjClass::word(&[j, i]));
    assert_eq!(proj_pairing::<Rat>(&d, &ij, &ij).unwrap(), g);
    let swap = Pi::pi_pow((d.parity[i] * d.parity[j]) as i64);
    assert_eq!(proj_pairing::<Rat>(&d, &ij, &ji).unwrap(), &swap * &g);
}

#[test]
fn pairing_matches_the_covering_form_in_low_height() {
    for d in all_builtins() {
        for h in 1..=2 {
            for w in Weight::all_of_height(d.rank(), h) {
                let r = gamma_check::<Rat>(&d, &w);
                assert!(r.passed(), "{} {}: {:?}", d.name, w.display(&d), r.mismatches);
                assert_eq!(r.checked, enumerate_sequences(&w).len().pow(2));
            }
        }
    }
    let d = builtin("b01").unwrap();
    for w in Weight::all_of_height(2, 3) {
        assert!(gamma_check::<Rat>(&d, &w).passed());
    }
}

#[test]
fn gamma_report_json_names_the_weight() {
    let d = builtin("b01").unwrap();
    let r = gamma_check::<Rat>(&d, &Weight(vec![1, 1]));
    let v = r.to_json(&d);
    assert_eq!(v["checked"], 4);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["datum"], "b01");
}

#[test]
fn restriction_of_two_letter_words() {
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    let s = restrict_decomposition(&d, &[o, e], &Weight::simple(2, o), RestrictionShift::Degree).unwrap();
    assert_eq!(s, vec![Summand { left: vec![o], right: vec![e], q_shift: 0, pi_shift: 0 }]);
    let s = restrict_decomposition(&d, &[o, e], &Weight::simple(2, e), RestrictionShift::Degree).unwrap();
    assert_eq!(s, vec![Summand { left: vec![e], right: vec![o], q_shift: -d.pairing[o][e], pi_shift: 0 }]);
    for name in ["osp12", "b01"] {
        let d = builtin(name).unwrap();
        for i in 0..d.rank() {
            let s = restrict_decomposition(&d, &[i, i], &Weight::simple(d.rank(), i), RestrictionShift::Degree).unwrap();
            let shifts: Vec<(i64, u8)> = s.iter().map(|x| (x.q_shift, x.pi_shift)).collect();
            assert_eq!(shifts, vec![(0, 0), (-2 * d.sym[i] as i64, d.parity[i])], "{name} {i}");
        }
    }
    assert!(restrict_decomposition(&d, &[o], &Weight::simple(2, e), RestrictionShift::Degree).is_err());
}

#[test]
fn restriction_is_adjoint_to_induction_only_with_the_degree_reading() {
    let mut negated_failures = 0;
    for name in ["osp12", "b01", "aff-c"] {
        let d = builtin(name).unwrap();
        for w in Weight::all_of_height(d.rank(), 3) {
            let seqs = enumerate_sequences(&w);
            for uk in &seqs {
                for y in &seqs {
                    for m in 1..3 {
                        let (lhs, rhs) = restriction_form_check::<Rat>(&d, uk, &y[..m], &y[m..], RestrictionShift::Degree).unwrap();
                        assert_eq!(lhs, rhs, "{name} {uk:?} {y:?} {m}");
                        let (lhs, rhs) =
                            restriction_form_check::<Rat>(&d, uk, &y[..m], &y[m..], RestrictionShift::NegatedDegree).unwrap();
                        negated_failures += (lhs != rhs) as usize;
                    }
                }
            }
        }
    }
    assert!(negated_failures > 0);
}

/// Sorts the labels of `ui uj` into `uk` by adjacent swaps and grades the
/// resulting crossing word.
fn shuffle_grading(d: &RootDatum, uk: &[usize], left: &[usize]) -> (i64, u8, Vec<usize>) {
    let right: Vec<usize> = (0..uk.len()).filter(|a| !left.contains(a)).collect();
    let mut labels: Vec<usize> = left.iter().chain(&right).copied().collect();
    let start: Vec<usize> = labels.iter().map(|&a| uk[a]).collect();
    let mut applied = Vec::new();
    for pass in 0..labels.len() {
        for r in 0..labels.len() - 1 - pass {
            if labels[r] > labels[r + 1] {
                labels.swap(r, r + 1);
                applied.push(r);
            }
        }
    }
    applied.reverse();
    tau_grading(d, &start, &applied)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restriction_shifts_match_an_independent_enumeration(
        fixture in 0usize..8,
        letters in prop::collection::vec(0usize..8, 1..6),
        mask in 0u32..64,
    ) {
        let d = &all_builtins()[fixture];
        let uk: Vec<usize> = letters.iter().map(|&a| a % d.rank()).collect();
        let picked: Vec<usize> = (0..uk.len()).filter(|a| mask >> a & 1 == 1).collect();
        let mu = Weight::of_sequence(d.rank(), &picked.iter().map(|&a| uk[a]).collect::<Vec<_>>());
        let got = restrict_decomposition(d, &uk, &mu, RestrictionShift::Degree).unwrap();
        let mut expected = Vec::new();
        for bits in (0u32..1 << uk.len()).rev() {
            let left: Vec<usize> = (0..uk.len()).filter(|a| bits >> a & 1 == 1).collect();
            let lw: Vec<usize> = left.iter().map(|&a| uk[a]).collect();
            if Weight::of_sequence(d.rank(), &lw) != mu {
                continue;
            }
            let (deg, par, target) = shuffle_grading(d, &uk, &left);
            prop_assert_eq!(&target, &uk);
            let rw: Vec<usize> = (0..uk.len()).filter(|a| !left.contains(a)).map(|a| uk[a]).collect();
            expected.push((lw, rw, deg, par));
        }
        let mut got: Vec<_> = got.into_iter().map(|s| (s.left, s.right, s.q_shift, s.pi_shift)).collect();
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn pairing_is_symmetric(fixture in 0usize..8, letters in prop::collection::vec(0usize..8, 1..4), rot in 0usize..4) {
        let d = &all_builtins()[fixture];
        let x: Vec<usize> = letters.iter().map(|&a| a % d.rank()).collect();
        let mut y = x.clone();
        let n = y.len();
        y.rotate_left(rot % n);
        let (px, py) = (ProjClass::word(&x), ProjClass::word(&y));
        prop_assert_eq!(proj_pairing::<Rat>(d, &px, &py).unwrap(), proj_pairing::<Rat>(d, &py, &px).unwrap());
    }
}

#[test]
fn shuffle_counts() {
    assert_eq!(shuffles(4, 2).len(), 6);
    assert_eq!(shuffles(5, 2).len(), 10);
    assert_eq!(shuffles(3, 0), vec![Vec::<usize>::new()]);
    assert!(shuffles(2, 3).is_empty());
    assert_eq!(shuffles(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
}

#[test]
fn character_of_a_single_strand_is_geometric() {
    for name in ["osp12", "b01"] {
        let d = builtin(name).unwrap();
        for i in 0..d.rank() {
            let rep = PolyRep::<Rat>::new(&d, &Weight::simple(d.rank(), i));
            let ch = idempotent_char(&rep, &ProjClass::word(&[i]), 10, ParityShift::PerBlock).unwrap();
            assert_eq!(ch.len(), 1);
            assert_eq!(ch[&vec![i]], series_expand(&geometric(&d, i), 10).unwrap(), "{name} {i}");
        }
    }
}

#[test]
fn word_characters_expand_the_pairing() {
    let order = 8;
    for (name, weights) in [("osp12", vec![vec![2], vec![3]]), ("b01", vec![vec![1, 1], vec![0, 2], vec![2, 1]])] {
        let d = builtin(name).unwrap();
        for w in weights {
            let w = Weight(w);
            let rep = PolyRep::<Rat>::new(&d, &w);
            for ui in enumerate_sequences(&w) {
                let ch = raw_char(&rep, &ProjClass::word(&ui), order).unwrap();
                for uj in enumerate_sequences(&w) {
                    let expected = series_expand(&word_pairing::<Rat>(&d, &ui, &uj), order as i32).unwrap();
                    let got = ch.get(&uj).cloned().unwrap_or_else(|| PiSeries::zero(order as i32));
                    assert_eq!(got, expected, "{name} {ui:?} -> {uj:?}");
                }
            }
        }
    }
}

#[test]
fn divided_characters_carry_the_factorial() {
    let d = builtin("osp12").unwrap();
    for k in 2..=3 {
        let rep = PolyRep::<Rat>::new(&d, &Weight(vec![k]));
        let class = ProjClass::divided(&[(0, k)]);
        assert!(character_check(&rep, &class, 8, ParityShift::PerBlock).unwrap().is_empty(), "o^{k}");
    }
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    let rep = PolyRep::<Rat>::new(&d, &Weight::of_sequence(2, &[e, e, o]));
    for class in [ProjClass::divided(&[(e, 2), (o, 1)]), ProjClass::divided(&[(o, 1), (e, 2)])] {
        assert!(character_check(&rep, &class, 8, ParityShift::PerBlock).unwrap().is_empty());
        assert!(!character_check(&rep, &class, 8, ParityShift::Literal).unwrap().is_empty());
    }
    let rep = PolyRep::<Rat>::new(&d, &Weight::of_sequence(2, &[o, o, e]));
    let class = ProjClass::divided(&[(o, 2), (e, 1)]);
    assert!(character_check(&rep, &class, 8, ParityShift::PerBlock).unwrap().is_empty());
}

#[test]
fn intrinsic_shifts() {
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    let shift = |blocks: &[(usize, u32)], r| ProjClass::divided(blocks).intrinsic_shift(&d, r);
    assert_eq!(shift(&[(o, 2)], ParityShift::PerBlock), (-1, 1));
    assert_eq!(shift(&[(o, 3)], ParityShift::PerBlock), (-3, 1));
    assert_eq!(shift(&[(e, 2)], ParityShift::PerBlock), (-2, 0));
    assert_eq!(shift(&[(e, 2), (o, 1)], ParityShift::PerBlock), (-2, 0));
    assert_eq!(shift(&[(e, 2), (o, 1)], ParityShift::Literal), (-2, 1));
    assert_eq!(shift(&[(o, 1), (e, 1)], ParityShift::PerBlock), (0, 0));
}

#[test]
fn shifts_multiply_characters() {
    let d = builtin("b01").unwrap();
    let o = node(&d, "odd");
    let rep = PolyRep::<Rat>::new(&d, &Weight::simple(2, o).add(&Weight::simple(2, o)));
    let class = ProjClass::divided(&[(o, 2)]);
    let base = idempotent_char(&rep, &class, 6, ParityShift::PerBlock).unwrap();
    let moved = idempotent_char(&rep, &class.shifted(2, 1), 8, ParityShift::PerBlock).unwrap();
    for (seq, s) in &base {
        assert_eq!(moved[seq], s.shift(2, 1));
    }
}

#[test]
fn the_dual_of_a_shift_is_its_bar() {
    let c = ProjClass::word(&[0]);
    for q in -3..=3 {
        for p in 0..2 {
            let x = c.shifted(q, p);
            assert_eq!(x.dual().shift_scalar::<Rat>(), bar(&x.shift_scalar::<Rat>()), "q^{q} pi^{p}");
            assert_eq!(x.dual().dual(), x);
        }
    }
    assert_eq!(c.shifted(1, 0).dual(), c.shifted(-1, 1));
}

#[test]
fn induction_concatenates() {
    let d = builtin("b01").unwrap();
    let a = ProjClass::parse(&d, "o^2").unwrap().shifted(1, 1);
    let b = ProjClass::parse(&d, "e").unwrap().shifted(-3, 1);
    assert_eq!(a.induce(&b), ProjClass::parse(&d, "o^2,e").unwrap().shifted(-2, 0));
}

#[test]
fn class_parsing() {
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    assert_eq!(ProjClass::parse(&d, "o,o,e").unwrap(), ProjClass::word(&[o, o, e]));
    assert_eq!(ProjClass::parse(&d, "ooe").unwrap(), ProjClass::word(&[o, o, e]));
    assert_eq!(ProjClass::parse(&d, "o^2,e").unwrap(), ProjClass::divided(&[(o, 2), (e, 1)]));
    assert_eq!(ProjClass::parse(&d, "o^(2)e").unwrap(), ProjClass::divided(&[(o, 2), (e, 1)]));
    assert_eq!(ProjClass::parse(&d, "odd,even").unwrap(), ProjClass::word(&[o, e]));
    assert_eq!(ProjClass::parse(&d, "o^2,e").unwrap().display(&d), "P[o^(2),e]");
    assert!(ProjClass::parse(&d, "x").is_err());
    assert!(ProjClass::parse(&d, "o^z").is_err());
    let bad = ProjClass { seq: vec![o, e], grouping: vec![2], q_shift: 0, pi_shift: 0 };
    assert!(matches!(bad.validate(), Err(GrothendieckError::InvalidGrouping(_))));
}

#[test]
fn categorical_serre_for_the_odd_node_of_b01() {
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    let r = categorical_serre::<Rat>(&d, o, e, 16).unwrap();
    assert_eq!(r.n, 4);
    let names: Vec<&str> = r.clauses.iter().map(|c| c.name).collect();
    assert_eq!(names, ["boundary", "interior", "chain", "parity", "character", "composite"]);
    for c in &r.clauses {
        assert!(c.holds && c.checked > 0, "{}: {:?}", c.name, c.witness);
    }
    assert_eq!(r.literal, LiteralChecks { boundary: false, interior: false, composite: Some(false) });
    let v = r.to_json();
    assert_eq!(v["passed"], true);
    assert_eq!(v["clauses"]["character"]["holds"], true);
    assert!(v["witness"].is_null());
}

#[test]
fn categorical_serre_for_orthogonal_nodes() {
    let d = builtin("aff-c").unwrap();
    let i = node(&d, "odd");
    let j = (0..d.rank()).find(|&j| d.cartan(i, j) == 0).unwrap();
    for (a, b) in [(i, j), (j, i)] {
        let r = categorical_serre::<Rat>(&d, a, b, 16).unwrap();
        assert_eq!(r.n, 2);
        assert!(r.passed(), "{:?}", r.clauses);
        assert_eq!(r.literal.boundary, true);
    }
    assert!(categorical_serre::<Rat>(&d, i, i, 4).is_err());
}

#[test]
fn resolved_serre_constants() {
    let d = builtin("b01").unwrap();
    let (o, e) = (node(&d, "odd"), node(&d, "even"));
    let c = SerreConstants::resolved(&d, o, e);
    assert_eq!((c.top, c.bottom, c.sigma), (-1, -1, -1));
    assert_eq!((c.interior(1), c.interior(2)), (-1, 1));
    let p = SerreConstants::literal(&d, o, e);
    assert_eq!((p.top, p.bottom, p.sigma), (1, 1, 1));
}

#[test]
fn resolved_constants_hold_on_random_quivers() {
    let mut seen = BTreeMap::new();
    for seed in 0..300u64 {
        let d = random_quiver(seed).1;
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                if i == j || d.cartan(i, j) < -4 {
                    continue;
                }
                let key = (d.parity[i], d.parity[j], d.cartan(i, j), d.edge_orbits[i][j] % 2);
                if seen.contains_key(&key) {
                    continue;
                }
                let r = categorical_serre_maps::<Rat>(&d, i, j, 8).unwrap();
                assert!(r.passed(), "seed {seed} {key:?}: {:?}", r.clauses);
                assert!(r.clause("character").is_none());
                seen.insert(key, seed);
            }
        }
    }
    assert!(seen.len() >= 20, "{} classes", seen.len());
    assert!(seen.keys().any(|k| k.0 == 1 && k.2 == -4));
}

#[test]
fn type_m_ranks() {
    let d = builtin("osp12").unwrap();
    assert_eq!(type_m_check::<Rat>(&d, &Weight(vec![1])), (1, 1));
    assert_eq!(type_m_check::<Rat>(&d, &Weight(vec![3])), (1, 1));
    for d in all_builtins() {
        for h in 1..=3 {
            for w in Weight::all_of_height(d.rank(), h) {
                let (plus, minus) = type_m_check::<Rat>(&d, &w);
                assert_eq!(plus, minus, "{} {}", d.name, w.display(&d));
            }
        }
    }
}
