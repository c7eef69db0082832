//! Seeded sweep: generator, validators, oracle cross-checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use twostab::oracle::{generate, GenClass, GeneratorConfig};
use twostab::StabRepresentation;

use crate::checks::{check_representation, minimize, Fault, Finding};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub class: GenClass,
    pub seeds: u64,
    pub max_n: usize,
    pub base_seed: u64,
    pub fault: Option<Fault>,
}

impl FuzzConfig {
    /// Command line that regenerates the instance with generator seed `seed`.
    pub fn replay_command(&self, seed: u64) -> String {
        let mut cmd =
            format!("twostab fuzz --class {} --seeds 1 --max-n {} --seed {seed}", self.class, self.max_n);
        if let Some(f) = self.fault {
            cmd.push_str(&format!(" --inject-fault {}", clap::ValueEnum::to_possible_value(&f).unwrap().get_name()));
        }
        cmd
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub finding: Finding,
    pub command: String,
    pub representation: StabRepresentation,
    pub minimized: StabRepresentation,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FuzzSummary {
    pub instances: u64,
    /// Seeds for which the generator gave up.
    pub skipped: Vec<u64>,
    pub checks: BTreeMap<&'static str, u64>,
    pub label_counterexamples: u64,
    pub first_label_counterexample: Option<(u64, String)>,
    pub failure: Option<Failure>,
}

enum SeedResult {
    Skipped,
    Ran(StabRepresentation, crate::checks::Outcome),
}

pub fn run(cfg: &FuzzConfig) -> FuzzSummary {
    let results: Vec<(u64, SeedResult)> = (0..cfg.seeds)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.base_seed.wrapping_add(i);
            let gen = GeneratorConfig::sweep(cfg.class, seed, cfg.max_n);
            match generate(&gen) {
                Ok(rep) => {
                    let o = check_representation(&rep, cfg.fault);
                    (seed, SeedResult::Ran(rep, o))
                }
                Err(_) => (seed, SeedResult::Skipped),
            }
        })
        .collect();

    let mut sum = FuzzSummary::default();
    for (seed, r) in results {
        match r {
            SeedResult::Skipped => sum.skipped.push(seed),
            SeedResult::Ran(rep, o) => {
                sum.instances += 1;
                for c in &o.checks {
                    *sum.checks.entry(c).or_default() += 1;
                }
                if let Some(ce) = o.label_counterexample {
                    sum.label_counterexamples += 1;
                    sum.first_label_counterexample.get_or_insert((seed, ce));
                }
                if let (Some(f), None) = (o.failure, &sum.failure) {
                    let minimized = minimize(&rep, f.check, cfg.fault);
                    sum.failure =
                        Some(Failure { seed, command: cfg.replay_command(seed), finding: f, representation: rep, minimized });
                }
            }
        }
    }
    sum
}

impl FuzzSummary {
    pub fn to_text(&self, cfg: &FuzzConfig) -> String {
        let mut s = format!(
            "fuzz class {} seeds {} max-n {} seed {}\ninstances {} skipped {}\n",
            cfg.class,
            cfg.seeds,
            cfg.max_n,
            cfg.base_seed,
            self.instances,
            self.skipped.len()
        );
        for (c, k) in &self.checks {
            s.push_str(&format!("check {c} {k}\n"));
        }
        s.push_str(&format!("label-separation counterexamples {}\n", self.label_counterexamples));
        if let Some((seed, ce)) = &self.first_label_counterexample {
            s.push_str(&format!("  first at seed {seed}: {ce}\n"));
        }
        s
    }
}
