//! Randomized property tests for the structural invariants that hold on
//! every diagram, word and weight.

use proptest::prelude::*;

use flagbundles::bundle;
use flagbundles::cohom;
use flagbundles::diagrams::DynkinDiagram;
use flagbundles::lattice::IsogenyLattice;
use flagbundles::mat::dot;
use flagbundles::rootsys::RootSystem;
use flagbundles::weyl;

const SPECS: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "G2", "A1+A2"];

fn arb_system() -> impl Strategy<Value = RootSystem> {
    (0..SPECS.len()).prop_map(|i| {
        RootSystem::generate(&DynkinDiagram::parse(SPECS[i]).unwrap())
    })
}

fn arb_system_and_word() -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
    arb_system().prop_flat_map(|rs| {
        let k = rs.rank();
        (Just(rs), proptest::collection::vec(0..k, 0..8))
    })
}

fn arb_system_and_vec(lo: i64, hi: i64) -> impl Strategy<Value = (RootSystem, Vec<i64>)> {
    arb_system().prop_flat_map(move |rs| {
        let k = rs.rank();
        (Just(rs), proptest::collection::vec(lo..=hi, k))
    })
}

proptest! {
    #[test]
    fn word_length_matches_inversions((rs, word) in arb_system_and_word()) {
        let w = weyl::word_to_element(&rs, &word).unwrap();
        prop_assert!(w.length() <= word.len());
        let reduced = w.reduced_word(&rs);
        prop_assert_eq!(reduced.len(), w.length());
        prop_assert_eq!(weyl::word_to_element(&rs, &reduced).unwrap(), w);
    }

    #[test]
    fn group_action_preserves_pairing((rs, word) in arb_system_and_word(),
                                      seed in proptest::collection::vec(-5i64..=5, 16)) {
        let k = rs.rank();
        let w = weyl::word_to_element(&rs, &word).unwrap();
        let lambda = &seed[..k];
        let cv = &seed[8..8 + k];
        let lhs = dot(&w.act_on_weight(lambda).unwrap(), &w.act_on_coroot(cv).unwrap());
        prop_assert_eq!(lhs, dot(lambda, cv));
    }

    #[test]
    fn inverse_is_two_sided((rs, word) in arb_system_and_word()) {
        let w = weyl::word_to_element(&rs, &word).unwrap();
        prop_assert!(w.mul(&rs, &w.inverse()).is_identity());
        prop_assert!(w.inverse().mul(&rs, &w).is_identity());
    }

    #[test]
    fn demazure_dominates_plain_product((rs, word) in arb_system_and_word()) {
        let plain = weyl::word_to_element(&rs, &word).unwrap();
        let folded = weyl::demazure_product(&rs, &word).unwrap();
        prop_assert!(folded.length() >= plain.length());
        prop_assert!(folded.length() <= word.len());
        if weyl::is_reduced(&rs, &word).unwrap() {
            prop_assert_eq!(folded, plain);
        }
    }

    #[test]
    fn dot_reflect_involution((rs, lambda) in arb_system_and_vec(-6, 6), i_raw in 0usize..8) {
        let i = i_raw % rs.rank();
        let once = cohom::dot_reflect(&rs, &lambda, i).unwrap();
        let twice = cohom::dot_reflect(&rs, &once, i).unwrap();
        prop_assert_eq!(twice, lambda);
    }

    #[test]
    fn euler_magnitude_constant_on_dot_orbits((rs, lambda) in arb_system_and_vec(-4, 4),
                                              i_raw in 0usize..8) {
        let i = i_raw % rs.rank();
        let chi = cohom::euler_characteristic(&rs, &lambda).unwrap();
        let reflected =
            cohom::euler_characteristic(&rs, &cohom::dot_reflect(&rs, &lambda, i).unwrap())
                .unwrap();
        prop_assert_eq!(chi.magnitude(), reflected.magnitude());
    }

    #[test]
    fn normalization_reaches_dominant_chamber((rs, raw) in arb_system_and_vec(-6, 6)) {
        let (dominant, w) = bundle::normalize_to_dominant(&rs, &raw).unwrap();
        prop_assert!(dominant.iter().all(|&c| c >= 0));
        prop_assert_eq!(w.act_on_coweight(&raw).unwrap(), dominant);
    }

    #[test]
    fn sc_lattice_closed_under_addition((rs, v) in arb_system_and_vec(-4, 4),
                                        w in proptest::collection::vec(-4i64..=4, 8)) {
        let lat = IsogenyLattice::simply_connected(rs.diagram());
        let k = rs.rank();
        let w = &w[..k];
        if lat.membership(&v).unwrap() && lat.membership(w).unwrap() {
            let sum: Vec<i64> = v.iter().zip(w).map(|(a, b)| a + b).collect();
            prop_assert!(lat.membership(&sum).unwrap());
        }
    }

    #[test]
    fn b_dominates_c((rs, _) in arb_system_and_vec(0, 0), mask in 0u32..256) {
        let k = rs.rank();
        let i_set: std::collections::BTreeSet<usize> =
            (0..k).filter(|t| mask >> t & 1 == 1).collect();
        let b = rs.b_coefficients();
        let c = rs.c_coefficients(&i_set);
        prop_assert!(b.iter().zip(&c).all(|(bi, ci)| bi >= ci && *ci >= 0));
    }
}
