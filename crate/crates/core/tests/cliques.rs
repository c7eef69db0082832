mod common;

use twostab::cliques::{
    clique_number, label_bridge_edges, maximal_cliques_2siig, maximal_cliques_2suig, maximal_cliques_general,
};
use twostab::oracle::{bruteforce_maximal_cliques, naive_maximal_cliques, named_clique_set, GenClass};
use twostab::{presets, Instance};

fn check_against_oracle(class: GenClass, count: usize) {
    for (seed, rep) in common::corpus(class, count, 16) {
        let inst = Instance::new(&rep).unwrap();
        let got = match class {
            GenClass::Siig => maximal_cliques_2siig(&inst).unwrap(),
            _ => maximal_cliques_2suig(&inst).unwrap(),
        };
        let want = bruteforce_maximal_cliques(&inst.graph).unwrap();
        assert_eq!(named_clique_set(&inst.graph, &got), named_clique_set(&inst.graph, &want), "{class} seed {seed}");
    }
}

#[test]
fn suig_enumeration_matches_oracle() {
    check_against_oracle(GenClass::Suig, 300);
}

#[test]
fn siig_enumeration_matches_oracle() {
    check_against_oracle(GenClass::Siig, 300);
}

#[test]
fn general_enumeration_matches_oracle() {
    for (seed, rep) in common::corpus(GenClass::Sig, 300, 14) {
        let inst = Instance::new(&rep).unwrap();
        let got = maximal_cliques_general(&inst);
        let want = bruteforce_maximal_cliques(&inst.graph).unwrap();
        assert_eq!(named_clique_set(&inst.graph, &got), named_clique_set(&inst.graph, &want), "seed {seed}");
    }
}

#[test]
fn oracles_agree_up_to_ten_vertices() {
    for (seed, rep) in common::corpus(GenClass::Sig, 400, 10) {
        let g = Instance::new(&rep).unwrap().graph;
        let a = bruteforce_maximal_cliques(&g).unwrap();
        let b = naive_maximal_cliques(&g).unwrap();
        assert_eq!(named_clique_set(&g, &a), named_clique_set(&g, &b), "seed {seed}");
    }
}

#[test]
fn labels_are_acyclic_and_start_at_zero() {
    for (seed, rep) in common::corpus(GenClass::Suig, 300, 16) {
        let inst = Instance::new(&rep).unwrap();
        let labeling = label_bridge_edges(&inst).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let classes = labeling.classes();
        if let Some(&top) = classes.keys().last() {
            assert!((0..=top).all(|i| classes.contains_key(&i)), "seed {seed}: label gap");
        }
    }
}

#[test]
fn observation_bounds_hold() {
    for (seed, rep) in common::corpus(GenClass::Sig, 300, 14) {
        let inst = Instance::new(&rep).unwrap();
        let w = clique_number(&inst);
        assert!(w.lower_bound <= w.omega && w.omega <= w.upper_bound, "seed {seed}: {w:?}");
    }
}

#[test]
fn fig2_has_eight_cliques_and_omega_three() {
    let inst = Instance::new(&presets::fig2()).unwrap();
    assert_eq!(maximal_cliques_2suig(&inst).unwrap().len(), 8);
    assert_eq!(maximal_cliques_2siig(&inst).unwrap().len(), 8);
    assert_eq!(clique_number(&inst).omega, 3);
}

#[test]
fn complete_split_attains_upper_bound() {
    let inst = Instance::new(&presets::complete_split(3, 2)).unwrap();
    let w = clique_number(&inst);
    assert_eq!(w.omega, w.upper_bound);
}
