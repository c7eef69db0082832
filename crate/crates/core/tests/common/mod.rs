#![allow(dead_code)]

use twostab::oracle::{generate, GenClass, GeneratorConfig};
use twostab::StabRepresentation;

pub fn config(class: GenClass, seed: u64, max_n: usize) -> GeneratorConfig {
    GeneratorConfig::sweep(class, seed, max_n)
}

pub fn corpus(class: GenClass, count: usize, max_n: usize) -> Vec<(u64, StabRepresentation)> {
    (0..count as u64)
        .map(|seed| {
            let rep = generate(&config(class, seed, max_n)).unwrap_or_else(|e| panic!("{class} seed {seed}: {e}"));
            (seed, rep)
        })
        .collect()
}

/// Strict-partition 2SUIIG instances, skipping sizes the generator cannot fill.
pub fn strict_corpus(count: usize) -> Vec<(u64, StabRepresentation)> {
    (0..).filter_map(|seed| generate(&GeneratorConfig::strict_sweep(seed)).ok().map(|r| (seed, r))).take(count).collect()
}
