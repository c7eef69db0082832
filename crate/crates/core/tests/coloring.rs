mod common;

use twostab::cliques::clique_number;
use twostab::coloring::{
    chromatic_bounds, color_2sig, color_2siig, color_bridge_triangle_free_2suig, color_triangle_free_2suig,
};
use twostab::oracle::{bruteforce_chromatic, GenClass};
use twostab::{presets, Instance, StabPartition};

#[test]
fn general_colorings_use_at_most_twice_omega() {
    for (seed, rep) in common::corpus(GenClass::Sig, 200, 12) {
        let inst = Instance::new(&rep).unwrap();
        let c = color_2sig(&inst);
        assert!(c.covers(&inst.graph) && c.is_proper(&inst.graph), "seed {seed}");
        let omega = clique_number(&inst).omega;
        let chi = bruteforce_chromatic(&inst.graph).unwrap();
        assert!(omega <= chi && chi <= c.palette() && c.palette() <= 2 * omega.max(1), "seed {seed}");
        let (lo, hi) = chromatic_bounds(&inst);
        assert!(lo <= chi && chi <= hi, "seed {seed}");
    }
}

#[test]
fn siig_colorings_use_at_most_omega_plus_one() {
    for (seed, rep) in common::corpus(GenClass::Siig, 200, 12) {
        let inst = Instance::new(&rep).unwrap();
        let c = color_2siig(&inst).unwrap();
        assert!(c.covers(&inst.graph) && c.is_proper(&inst.graph), "seed {seed}");
        let omega = clique_number(&inst).omega;
        assert!(c.palette() <= omega + 1, "seed {seed}");
        assert!(bruteforce_chromatic(&inst.graph).unwrap() <= omega + 1, "seed {seed}");
    }
}

#[test]
fn triangle_free_colorings_use_three_colors() {
    for (seed, rep) in common::corpus(GenClass::TriangleFree2Suig, 200, 14) {
        let inst = Instance::new(&rep).unwrap();
        let c = color_triangle_free_2suig(&inst).unwrap().coloring;
        assert!(c.covers(&inst.graph) && c.is_proper(&inst.graph), "seed {seed}");
        assert!(c.palette() <= 3, "seed {seed}");
        let part = StabPartition::from_instance(&inst);
        for &(u, v) in &part.bridge_edges {
            assert!(c.color(u).unwrap() < 2 && c.color(v).unwrap() < 2, "seed {seed}");
        }
    }
}

#[test]
fn bridge_triangle_free_colorings_are_proper() {
    for (seed, rep) in common::corpus(GenClass::BridgeTriangleFree2Suig, 200, 12) {
        let inst = Instance::new(&rep).unwrap();
        let p = color_bridge_triangle_free_2suig(&inst).unwrap();
        assert!(p.coloring.covers(&inst.graph) && p.coloring.is_proper(&inst.graph), "seed {seed}");
        let chi = bruteforce_chromatic(&inst.graph).unwrap();
        assert!(p.omega <= chi && chi <= p.omega + 1, "seed {seed}");
        assert_eq!(p.exceeds_bound, p.coloring.palette() > p.omega + 1);
    }
}

#[test]
fn c5_needs_three_colors() {
    let inst = Instance::new(&presets::c5_2suiig()).unwrap();
    assert_eq!(clique_number(&inst).omega, 2);
    assert_eq!(bruteforce_chromatic(&inst.graph).unwrap(), 3);
    assert_eq!(color_triangle_free_2suig(&inst).unwrap().coloring.palette(), 3);
}
