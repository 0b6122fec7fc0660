use std::collections::BTreeSet;

use proptest::prelude::*;
use tamari_cubic::cells::{cell_vertices, gamma, gamma_inv, is_minimal_cellular, Cell};
use tamari_cubic::cubic::{
    cc_lattice, cc_leq, chain_between, covers, join, meet, min_increase, phi, phi_inv, psi, psi_inv, CubicCoordinate,
};
use tamari_cubic::diagrams::TamariIntervalDiagram;
use tamari_cubic::intervalposets::{chi, chi_inv, rho, rho_inv, IntervalPoset, TamariInterval};
use tamari_cubic::shelling::{increasing_chain, weakly_decreasing_chain};
use tamari_cubic::trees::{enumerate_trees, BinaryTree};

/// A coordinate of size 1..=5 drawn uniformly from its enumeration.
fn coordinate() -> impl Strategy<Value = CubicCoordinate> {
    (1usize..=5).prop_flat_map(|n| {
        let lat = cc_lattice(n);
        (0..lat.len()).prop_map(move |k| lat.get(k).clone())
    })
}

fn coordinate_pair() -> impl Strategy<Value = (CubicCoordinate, CubicCoordinate)> {
    (1usize..=5).prop_flat_map(|n| {
        let lat = cc_lattice(n);
        let len = lat.len();
        (0..len, 0..len).prop_map(move |(a, b)| (lat.get(a).clone(), lat.get(b).clone()))
    })
}

fn tree() -> impl Strategy<Value = BinaryTree> {
    (0usize..=7).prop_flat_map(|n| {
        let all = enumerate_trees(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #[test]
    fn validation_matches_enumeration(n in 1usize..=5, raw in prop::collection::vec(-5i32..=5, 0..5)) {
        let mut w = raw;
        w.resize(n - 1, 0);
        let valid = CubicCoordinate::new(w.clone()).is_ok();
        let member = cc_lattice(n).elements().iter().any(|c| c.as_slice() == w.as_slice());
        prop_assert_eq!(valid, member);
    }

    #[test]
    fn tree_codecs_round_trip(t in tree()) {
        let u = t.tamari_diagram();
        let v = t.dual_tamari_diagram();
        prop_assert_eq!(BinaryTree::from_tamari_diagram(u.as_slice()).unwrap(), t.clone());
        prop_assert_eq!(BinaryTree::from_dual_tamari_diagram(v.as_slice()).unwrap(), t.clone());
        prop_assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<BinaryTree>(&json).unwrap(), t);
    }

    #[test]
    fn representations_round_trip(c in coordinate()) {
        let d = phi(&c);
        prop_assert_eq!(&phi_inv(&d), &c);
        let p = chi(&d);
        prop_assert_eq!(&chi_inv(&p), &d);
        let iv = rho(&p);
        prop_assert_eq!(&rho_inv(&iv), &p);
        prop_assert_eq!(&psi(&iv), &c);
        prop_assert_eq!(&psi_inv(&c), &iv);

        prop_assert_eq!(c.to_string().parse::<CubicCoordinate>().unwrap(), c.clone());
        prop_assert_eq!(d.to_string().parse::<TamariIntervalDiagram>().unwrap(), d.clone());
        prop_assert_eq!(iv.to_string().parse::<TamariInterval>().unwrap(), iv.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntervalPoset>(&json).unwrap(), p);
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<TamariIntervalDiagram>(&json).unwrap(), d);
    }

    #[test]
    fn covers_change_one_component(c in coordinate()) {
        for d in covers(&c) {
            let diff: Vec<usize> = (1..c.size()).filter(|&i| c.get(i) != d.get(i)).collect();
            prop_assert_eq!(diff.len(), 1);
            prop_assert!(c.get(diff[0]) < d.get(diff[0]));
        }
        for i in 1..c.size() {
            if let Some(up) = min_increase(&c, i) {
                if c.get(i) < 0 {
                    prop_assert!(up.get(i) <= 0);
                }
            }
        }
    }

    #[test]
    fn meet_and_join_are_bounds((a, b) in coordinate_pair()) {
        let m = meet(&a, &b).unwrap();
        let j = join(&a, &b).unwrap();
        prop_assert!(cc_leq(&m, &a).unwrap() && cc_leq(&m, &b).unwrap());
        prop_assert!(cc_leq(&a, &j).unwrap() && cc_leq(&b, &j).unwrap());
        prop_assert_eq!(join(&a, &b).unwrap(), join(&b, &a).unwrap());
        prop_assert_eq!(cc_leq(&a, &b).unwrap(), j == b);
        prop_assert_eq!(cc_leq(&a, &b).unwrap(), m == a);
    }

    #[test]
    fn chains_are_saturated_and_labelled((a, b) in coordinate_pair()) {
        let (lo, hi) = (meet(&a, &b).unwrap(), join(&a, &b).unwrap());
        let chain = chain_between(&lo, &hi).unwrap();
        for w in chain.windows(2) {
            prop_assert!(covers(&w[0]).contains(&w[1]));
        }
        let inc = increasing_chain(&lo, &hi).unwrap();
        prop_assert!(inc.is_increasing());
        prop_assert_eq!(inc.elements, chain);
        if let Some(dec) = weakly_decreasing_chain(&lo, &hi).unwrap() {
            prop_assert!(dec.is_weakly_decreasing());
            prop_assert_eq!(dec.elements.last(), Some(&hi));
        }
    }

    #[test]
    fn cells_from_synchronized(c in coordinate()) {
        if c.is_synchronized() {
            let cell = gamma_inv(&c).unwrap();
            prop_assert_eq!(gamma(&cell), c.clone());
            prop_assert!(cell_vertices(&cell).contains(&c));
        }
        if is_minimal_cellular(&c) {
            let cell = Cell::new(c.clone()).unwrap();
            let v: BTreeSet<_> = cell_vertices(&cell).into_iter().collect();
            prop_assert_eq!(v.len(), 1 << (c.size() - 1));
        }
    }
}
