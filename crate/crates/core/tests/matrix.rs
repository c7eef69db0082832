mod common;

use twostab::matrix::{
    build_issr, is_issr, is_psa, parse_issr, reconstruct_representation, structural_lemma_violations, ZeroOneMatrix,
};
use twostab::rep::intersection_graph;
use twostab::{presets, Instance};

#[test]
fn strict_round_trips() {
    for (seed, rep) in common::strict_corpus(300) {
        let mat = build_issr(&rep).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(is_issr(&mat), Ok(()), "seed {seed}");
        let back = reconstruct_representation(&mat).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(back.validate().is_empty(), "seed {seed}");
        let again = build_issr(&back).unwrap();
        assert_eq!(intersection_graph(&back).unwrap(), intersection_graph(&rep).unwrap(), "seed {seed}");
        assert!(is_issr(&again).is_ok(), "seed {seed}");
    }
}

#[test]
fn text_format_round_trips() {
    for (seed, rep) in common::strict_corpus(50) {
        let mat = build_issr(&rep).unwrap();
        assert_eq!(parse_issr(&mat.to_text()).unwrap(), mat, "seed {seed}");
    }
}

#[test]
fn structural_lemmas_hold() {
    for (seed, rep) in common::strict_corpus(300) {
        let inst = Instance::new(&rep).unwrap();
        assert_eq!(structural_lemma_violations(&inst).unwrap(), vec![], "seed {seed}");
    }
}

#[test]
fn psa_rejects_three_ones() {
    let m = ZeroOneMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
    assert!(is_psa(&m).is_err());
}

#[test]
fn c5_builds_and_checks() {
    let mat = build_issr(&presets::c5_2suiig()).unwrap();
    assert_eq!(is_issr(&mat), Ok(()));
    assert_eq!(mat.graph(), intersection_graph(&presets::c5_2suiig()).unwrap());
}
