//! Randomised invariants of the combinatorial layer: sign coherence of root
//! systems under the Weyl action, reflection identities, canonicality of the
//! Hasse enumeration, and structural facts about curvature modules.

use proptest::prelude::*;

use pargap_core::{
    apply_simple_reflection, apply_word, build_root_system, canonical_types,
    grading_level, h2_modules, hasse_length2, inversion_data, regular_modules,
    Error, LieType, Parabolic, Weight,
};

fn arb_type() -> impl Strategy<Value = LieType> {
    proptest::sample::select(canonical_types(6))
}

fn arb_geometry() -> impl Strategy<Value = (LieType, u32)> {
    arb_type().prop_flat_map(|t| (Just(t), 1u32..(1 << t.rank)))
}

fn mask_to_parabolic(t: LieType, mask: u32) -> Parabolic {
    let crossed: Vec<usize> =
        (1..=t.rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
    Parabolic::new(crossed, t.rank).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_action_preserves_sign_coherent_roots(
        (t, word) in arb_type()
            .prop_flat_map(|t| (Just(t), proptest::collection::vec(1..=t.rank, 0..8))),
        pick in any::<proptest::sample::Index>(),
    ) {
        let rs = build_root_system(t).unwrap();
        let root = &rs.positive_roots[pick.index(rs.positive_roots.len())];
        let moved = apply_word(&rs, &word, &rs.root_to_weight(&root.0));
        let coeffs = rs.weight_to_root(&moved).unwrap();
        let nonneg = coeffs.iter().all(|&c| c >= 0);
        let nonpos = coeffs.iter().all(|&c| c <= 0);
        prop_assert!(nonneg ^ nonpos, "image not sign-coherent: {coeffs:?}");
        let abs: Vec<i64> = coeffs.iter().map(|c| c.abs()).collect();
        prop_assert!(rs.pos_index(&abs).is_some(), "image is not a root: {abs:?}");
    }

    #[test]
    fn simple_reflections_are_involutions(
        (t, i, coords) in arb_type().prop_flat_map(|t| {
            (Just(t), 1..=t.rank, proptest::collection::vec(-9i64..=9, t.rank..=t.rank))
        }),
    ) {
        let rs = build_root_system(t).unwrap();
        let w = Weight(coords);
        let back = apply_simple_reflection(&rs, i, &apply_simple_reflection(&rs, i, &w));
        prop_assert_eq!(back, w);
    }

    #[test]
    fn root_weight_coordinates_round_trip(
        (t, coeffs) in arb_type().prop_flat_map(|t| {
            (Just(t), proptest::collection::vec(-6i64..=6, t.rank..=t.rank))
        }),
    ) {
        let rs = build_root_system(t).unwrap();
        let w = rs.root_to_weight(&coeffs);
        prop_assert_eq!(rs.weight_to_root(&w).unwrap(), coeffs);
    }

    #[test]
    fn hasse_enumeration_is_canonical((t, mask) in arb_geometry()) {
        let rs = build_root_system(t).unwrap();
        let p = mask_to_parabolic(t, mask);
        let hasse = hasse_length2(&rs, &p).unwrap();
        prop_assert_eq!(&hasse, &hasse_length2(&rs, &p).unwrap());
        let mut words: Vec<(usize, usize)> = hasse.iter().map(|h| (h.j, h.k)).collect();
        words.sort_unstable();
        words.dedup();
        prop_assert_eq!(words.len(), hasse.len(), "duplicate words");
        for h in &hasse {
            prop_assert!(p.crossed.contains(&h.j));
            if rs.cartan[h.j - 1][h.k - 1] == 0 {
                prop_assert!(p.crossed.contains(&h.k));
                prop_assert!(h.j < h.k, "commuting word not in canonical orientation");
            }
        }
    }

    #[test]
    fn inversion_sets_are_two_distinct_positive_roots((t, mask) in arb_geometry()) {
        let rs = build_root_system(t).unwrap();
        let p = mask_to_parabolic(t, mask);
        let lambda = rs.root_to_weight(&rs.highest_root().0);
        for h in hasse_length2(&rs, &p).unwrap() {
            let (phi, _) = inversion_data(&rs, &h, &lambda).unwrap();
            prop_assert_eq!(phi.len(), 2);
            prop_assert_ne!(&phi[0], &phi[1]);
            for r in &phi {
                prop_assert!(r.is_positive());
            }
        }
    }

    #[test]
    fn curvature_modules_are_structurally_sound((t, mask) in arb_geometry()) {
        let rs = build_root_system(t).unwrap();
        let p = mask_to_parabolic(t, mask);
        let modules = h2_modules(&rs, &p).unwrap();
        for m in &modules {
            prop_assert!(m.j_mu.iter().all(|i| !p.crossed.contains(i)));
            prop_assert!(m.i_mu.iter().all(|i| p.crossed.contains(i)));
            let z: i64 = p.crossed.iter().map(|&i| m.mu_root[i - 1]).sum();
            prop_assert_eq!(z, m.homogeneity);
            prop_assert_eq!(m.regular, m.homogeneity >= 1);
            prop_assert_eq!(&rs.root_to_weight(&m.mu_root), &m.mu);
            for r in &m.wedge {
                prop_assert!(grading_level(&p, &r.0) >= 1);
            }
        }
        let regular = regular_modules(&rs, &p).unwrap();
        let expected: Vec<_> = modules.iter().filter(|m| m.regular).cloned().collect();
        prop_assert_eq!(regular.len(), expected.len());
        for (a, b) in regular.iter().zip(&expected) {
            prop_assert_eq!(&a.element, &b.element);
        }
    }
}

#[test]
fn weights_outside_the_root_lattice_are_rejected() {
    let rs = build_root_system(LieType::parse("A2").unwrap()).unwrap();
    let err = rs.weight_to_root(&Weight(vec![1, 0])).unwrap_err();
    assert!(matches!(err, Error::NotInRootLattice(_)), "got {err:?}");
}
