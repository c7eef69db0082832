mod common;

use proptest::prelude::*;
use twostab::interval::{
    complement_orientation, interval_maximal_cliques, is_snir, recognize_proper_interval, snir_matrix,
};
use twostab::oracle::{bruteforce_maximal_cliques, named_clique_set, GenClass};
use twostab::{Graph, Instance, Side};

fn graph_from_bits(n: usize, bits: u32) -> Graph {
    let mut g = Graph::new((0..n).map(|i| format!("v{i}"))).unwrap();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn exists_snir_order(g: &Graph) -> bool {
    fn go(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if perm.len() == g.n() {
            return is_snir(&snir_matrix(g, perm));
        }
        for v in 0..g.n() {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                if go(g, perm, used) {
                    return true;
                }
                perm.pop();
                used[v] = false;
            }
        }
        false
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn recognition_matches_exhaustive_search(n in 0usize..=7, bits in any::<u32>()) {
        let g = graph_from_bits(n, bits);
        let got = recognize_proper_interval(&g);
        prop_assert_eq!(got.is_ok(), exists_snir_order(&g));
        if let Ok(ord) = got {
            prop_assert!(is_snir(&snir_matrix(&g, &ord.order)));
        }
    }
}

#[test]
fn lexbfs_recognizes_large_unit_sides() {
    for (seed, rep) in common::corpus(GenClass::Suig, 150, 20) {
        let inst = Instance::new(&rep).unwrap();
        for side in [Side::Lower, Side::Upper] {
            let vs = inst.side_vertices(side);
            let g = inst.graph.induced(&vs);
            let ord = recognize_proper_interval(&g).unwrap_or_else(|e| panic!("seed {seed}: {e:?}"));
            assert!(is_snir(&snir_matrix(&g, &ord.order)), "seed {seed}");
        }
    }
}

#[test]
fn complement_orientations_are_transitive() {
    for (seed, rep) in common::corpus(GenClass::Sig, 300, 14) {
        let inst = Instance::new(&rep).unwrap();
        for side in [Side::Lower, Side::Upper] {
            let o = complement_orientation(&inst, side);
            assert!(o.is_transitive() && o.is_antisymmetric(), "seed {seed}");
            assert!(o.orients_complement_of(&inst.graph), "seed {seed}");
        }
    }
}

#[test]
fn side_sweep_matches_oracle() {
    for (seed, rep) in common::corpus(GenClass::Sig, 400, 14) {
        let inst = Instance::new(&rep).unwrap();
        for side in [Side::Lower, Side::Upper] {
            let vs = inst.side_vertices(side);
            let sub = inst.graph.induced(&vs);
            let swept: Vec<Vec<usize>> = interval_maximal_cliques(&inst, side)
                .into_iter()
                .map(|c| c.iter().map(|v| vs.iter().position(|w| w == v).unwrap()).collect())
                .collect();
            let oracle = bruteforce_maximal_cliques(&sub).unwrap();
            assert_eq!(named_clique_set(&sub, &swept), named_clique_set(&sub, &oracle), "seed {seed}");
        }
    }
}
