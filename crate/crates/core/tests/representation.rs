mod common;

use proptest::prelude::*;
use twostab::oracle::GenClass;
use twostab::rational::{r, Rational};
use twostab::rep::{intersection_graph, parse_representation, to_json};
use twostab::{presets, Instance, StabPartition};

#[test]
fn fig1_is_c5_with_two_bridges() {
    let rep = presets::fig1();
    assert!(rep.validate().is_empty());
    let inst = Instance::new(&rep).unwrap();
    let g = &inst.graph;
    assert_eq!(g.n(), 5);
    assert_eq!(g.edge_count(), 5);
    assert!((0..5).all(|v| g.degree(v) == 2));
    let part = StabPartition::from_instance(&inst);
    let names = |vs: &[usize]| vs.iter().map(|&v| inst.name(v).to_string()).collect::<Vec<_>>();
    assert_eq!(names(&part.lower), ["a", "b"]);
    assert_eq!(names(&part.upper), ["c", "d", "e"]);
    let mut bridges: Vec<String> =
        part.bridge_edges.iter().map(|&(u, v)| format!("{}{}", inst.name(u), inst.name(v))).collect();
    bridges.sort();
    assert_eq!(bridges, ["ae", "bc"]);
}

#[test]
fn empty_representation() {
    let rep = twostab::StabRepresentation::new();
    assert!(rep.validate().is_empty());
    assert_eq!(intersection_graph(&rep).unwrap().n(), 0);
}

fn epsilon() -> impl Strategy<Value = Rational> {
    (1i64..20).prop_map(|k| Rational::new(k, 20))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_round_trip(seed in 0u64..10_000, class in 0usize..GenClass::ALL.len()) {
        let rep = twostab::oracle::generate(&common::config(GenClass::ALL[class], seed, 12)).unwrap();
        let back = parse_representation(&to_json(&rep)).unwrap();
        prop_assert_eq!(&back, &rep);
        prop_assert_eq!(to_json(&back), to_json(&rep));
    }

    #[test]
    fn rescaling_epsilon_keeps_the_graph(seed in 0u64..10_000, eps in epsilon(), back_eps in epsilon()) {
        let rep = twostab::oracle::generate(&common::config(GenClass::Sig, seed, 12)).unwrap();
        let g = intersection_graph(&rep).unwrap();
        let scaled = rep.rescale_epsilon(eps).unwrap();
        prop_assert!(scaled.validate().is_empty());
        prop_assert_eq!(&intersection_graph(&scaled).unwrap(), &g);
        let again = scaled.rescale_epsilon(back_eps).unwrap();
        prop_assert_eq!(&intersection_graph(&again).unwrap(), &g);
    }
}

#[test]
fn rescale_to_half_is_identity_on_canonical_input() {
    let rep = presets::fig2();
    assert_eq!(rep.epsilon, r(1, 2));
    let same = rep.rescale_epsilon(r(1, 2)).unwrap();
    assert_eq!(intersection_graph(&same).unwrap(), intersection_graph(&rep).unwrap());
}
