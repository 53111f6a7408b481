use std::sync::Arc;

use proptest::prelude::*;

use cr_atlas_core::catalog::{class_key, normalized_presentation};
use cr_atlas_core::flag::{enumerate_paintings, painted_isomorphisms};
use cr_atlas_core::maximal_group::lift_to_maximal;
use cr_atlas_core::nonstandard_cr::{catalog, equivalent_nonstandard, Table2Entry, Table2Params};
use cr_atlas_core::rational::{gcd_all, q};
use cr_atlas_core::standard_cr::{canonical_tuple, equivalent_standard, StandardError};
use cr_atlas_core::{NonStandardCR, PaintedDiagram, RootSystem, SimpleLieType, StandardCR};

const TYPES: [&str; 15] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6",
];

fn painting(type_idx: usize, mask: u32) -> PaintedDiagram {
    let t: SimpleLieType = TYPES[type_idx].parse().unwrap();
    let mut m = mask & ((1 << t.rank) - 1);
    if m == 0 {
        m = 1;
    }
    let black: Vec<usize> = (0..t.rank).filter(|i| m & (1 << i) != 0).collect();
    PaintedDiagram::from_types(&[t], &black).unwrap()
}

fn arb_painting() -> impl Strategy<Value = PaintedDiagram> {
    (0..TYPES.len(), any::<u32>()).prop_map(|(t, m)| painting(t, m))
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![1i64..=4, -4i64..=-1]
}

/// A valid standard manifold, found by scanning tuples from a random start.
fn arb_standard() -> impl Strategy<Value = StandardCR> {
    (arb_painting(), prop::collection::vec(nonzero(), 8)).prop_filter_map(
        "no admissible tuple",
        |(d, raw)| {
            let m = d.black().len();
            let tuple: Vec<i64> = raw[..m].to_vec();
            let g = gcd_all(&tuple);
            let tuple: Vec<i64> = tuple.iter().map(|x| x / g).collect();
            StandardCR::new(d, tuple).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn integer_theta_pairs_integrally(d in arb_painting(), raw in prop::collection::vec(-5i64..=5, 8)) {
        let sys = d.system();
        for r in sys.positive_roots() {
            let v: i64 = r.coroot.iter().zip(&raw).map(|(c, p)| c * p).sum();
            let w = sys.weight(raw[..sys.rank()].iter().map(|&x| q(x, 1)).collect()).unwrap();
            prop_assert_eq!(w.pair_with_coroot(&r.coroot), q(v, 1));
        }
    }

    #[test]
    fn isotropy_is_invariant_under_painted_isomorphisms(d in arb_painting()) {
        for perm in d.system().diagram_automorphisms() {
            let img = PaintedDiagram::new(d.system().clone(), d.permuted_black(&perm)).unwrap();
            prop_assert_eq!(img.isotropy(), d.isotropy());
            prop_assert!(!painted_isomorphisms(&d, &img).is_empty());
        }
    }

    #[test]
    fn complementary_roots_count_flag_dimension(d in arb_painting()) {
        let n = d.complementary_positive_roots().len();
        prop_assert_eq!(n, d.complex_dimension());
        prop_assert_eq!(2 * n, d.system().dimension() - d.isotropy().dimension());
    }

    #[test]
    fn levi_is_invariant_and_negation_swaps(s in arb_standard()) {
        let sig = s.levi_signature();
        prop_assert_eq!(sig.n_plus + sig.n_minus, s.diagram().complex_dimension());
        prop_assert_eq!(s.conjugate().levi_signature(), sig.swapped());
        let c = s.canonical(false);
        prop_assert!(equivalent_standard(&s, &c, false).is_some());
        prop_assert_eq!(c.levi_signature(), sig);
        prop_assert_eq!(sig.n_minus == 0, s.tuple().iter().all(|&p| p > 0));
    }

    #[test]
    fn canonical_forms_are_idempotent(s in arb_standard(), conj in any::<bool>()) {
        let c = canonical_tuple(s.diagram(), s.tuple(), conj);
        prop_assert_eq!(canonical_tuple(s.diagram(), &c, conj), c.clone());
        prop_assert_eq!(s.canonical(conj).canonical(conj), s.canonical(conj));
    }

    #[test]
    fn scaling_is_reduced_away(s in arb_standard(), lambda in prop_oneof![2i64..=5, -5i64..=-2]) {
        let scaled: Vec<i64> = s.tuple().iter().map(|p| p * lambda).collect();
        let err = StandardCR::new(s.diagram().clone(), scaled.clone()).unwrap_err();
        prop_assert!(matches!(err, StandardError::NonPrimitive { .. }), "{}", err);
        let g = gcd_all(&scaled);
        let reduced: Vec<i64> = scaled.iter().map(|p| p / g).collect();
        let r = StandardCR::new(s.diagram().clone(), reduced).unwrap();
        prop_assert!(r == s || r == s.conjugate());
        prop_assert_eq!(r.contact_data().isotropy_l, s.contact_data().isotropy_l);
    }

    #[test]
    fn lifting_is_idempotent_and_keeps_the_class(s in arb_standard()) {
        let l = lift_to_maximal(&s);
        prop_assert_eq!(lift_to_maximal(&l), l.clone());
        prop_assert_eq!(l.dimension(), s.dimension());
        prop_assert_eq!(class_key(&l), class_key(&s));
        prop_assert_eq!(class_key(&s.conjugate()), class_key(&s));
        prop_assert_eq!(normalized_presentation(&s).levi_signature(), s.levi_signature());
    }

    #[test]
    fn nonstandard_equivalence_is_an_equivalence(pts in prop::collection::vec((-6i64..=6, -6i64..=6, 1usize..4), 3)) {
        let row2 = Table2Entry::new(2, Table2Params::none()).unwrap();
        let row6 = Table2Entry::new(6, Table2Params::n(4)).unwrap();
        let ms: Vec<NonStandardCR> = pts
            .iter()
            .filter_map(|&(a, b, which)| {
                let e = if which == 1 { row2.clone() } else { row6.clone() };
                NonStandardCR::new(e, q(a, 7), q(b, 7)).ok()
            })
            .collect();
        for a in &ms {
            prop_assert!(equivalent_nonstandard(a, a));
            for b in &ms {
                prop_assert_eq!(equivalent_nonstandard(a, b), equivalent_nonstandard(b, a));
                for c in &ms {
                    if equivalent_nonstandard(a, b) && equivalent_nonstandard(b, c) {
                        prop_assert!(equivalent_nonstandard(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn automorphisms_fix_cartan_matrices() {
    for t in SimpleLieType::all_up_to_rank(8) {
        let sys = RootSystem::new(&[t]).unwrap();
        let c = sys.cartan_matrix();
        for p in sys.diagram_automorphisms() {
            for i in 0..t.rank {
                for j in 0..t.rank {
                    assert_eq!(c[p[i]][p[j]], c[i][j], "{t}");
                }
            }
        }
    }
}

#[test]
fn orbit_representatives_are_pairwise_non_isomorphic() {
    for t in SimpleLieType::all_up_to_rank(6) {
        let reps = enumerate_paintings(&Arc::new(RootSystem::new(&[t]).unwrap()), true);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(painted_isomorphisms(a, b).is_empty(), "{a} ≅ {b}");
            }
        }
    }
}

#[test]
fn table2_dimensions_are_odd() {
    for t in catalog() {
        for e in t.instances_up_to_rank(8) {
            assert_eq!(e.dim_m() % 2, 1, "{}", e.quotient());
        }
    }
    let row6 = Table2Entry::new(6, Table2Params::n(4)).unwrap();
    assert_eq!(row6.dim_m(), 13);
}
