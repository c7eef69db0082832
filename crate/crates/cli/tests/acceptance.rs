//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use twostab::cliques::{
    clique_number, label_bridge_edges, maximal_cliques_2siig, maximal_cliques_2suig, mixed_labels,
};
use twostab::coloring::{
    color_2sig, color_2siig, color_bridge_triangle_free_2suig, color_triangle_free_2suig, Coloring,
};
use twostab::matrix::{build_issr, is_issr, reconstruct_representation, structural_lemma_violations};
use twostab::oracle::{
    bruteforce_chromatic, bruteforce_maximal_cliques, generate, named_clique_set, proper_to_unit,
    two_interval_representation, GenClass, GeneratorConfig,
};
use twostab::partition::find_bridge_triangles;
use twostab::rep::intersection_graph;
use twostab::{presets, Graph, Instance, StabPartition, StabRepresentation};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn corpus(class: GenClass, count: u64, max_n: usize) -> Vec<(u64, StabRepresentation)> {
    (0..count)
        .map(|seed| {
            let rep = generate(&GeneratorConfig::sweep(class, seed, max_n))
                .unwrap_or_else(|e| panic!("{class} seed {seed}: {e}"));
            (seed, rep)
        })
        .collect()
}

fn strict_corpus(count: usize) -> Vec<(u64, StabRepresentation)> {
    (0..)
        .filter_map(|seed| generate(&GeneratorConfig::strict_sweep(seed)).ok().map(|r| (seed, r)))
        .take(count)
        .collect()
}

fn names(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ")
}

fn fidelity() -> Verdict {
    let fig1 = presets::fig1();
    if !fig1.validate().is_empty() {
        return verdict(false, "fig1 does not validate");
    }
    let inst = Instance::new(&fig1).unwrap();
    let c5 = Graph::from_edges(&["a", "b", "c", "d", "e"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
        .unwrap();
    let part = StabPartition::from_instance(&inst);
    let g = &inst.graph;
    let mut bridges: Vec<String> =
        part.bridge_edges.iter().map(|&(u, v)| format!("{}{}", g.name(u), g.name(v))).collect();
    bridges.sort();
    let fig1_ok = *g == c5
        && names(g, &part.lower) == "a b"
        && names(g, &part.upper) == "c d e"
        && bridges == ["ae", "bc"];

    let fig2 = presets::fig2();
    let inst2 = Instance::new(&fig2).unwrap();
    let part2 = StabPartition::from_instance(&inst2);
    let cliques = maximal_cliques_2siig(&inst2).unwrap();
    let omega = clique_number(&inst2).omega;
    let fig2_ok = fig2.validate().is_empty()
        && find_bridge_triangles(&inst2.graph, &part2).is_empty()
        && inst2.is_2siig()
        && omega == 3
        && cliques.len() == 8;
    verdict(
        fig1_ok && fig2_ok,
        format!("fig1 C5 {fig1_ok}, bridges {bridges:?}; fig2 omega {omega}, {} maximal cliques", cliques.len()),
    )
}

struct CliqueRun {
    mismatches: Vec<String>,
    label_violations: usize,
    labeled_instances: usize,
    first_violation: Option<String>,
}

fn clique_corpus() -> (CliqueRun, usize) {
    let mut run = CliqueRun { mismatches: vec![], label_violations: 0, labeled_instances: 0, first_violation: None };
    let mut total = 0;
    for class in [GenClass::Suig, GenClass::Siig] {
        for (seed, rep) in corpus(class, 1000, 16) {
            total += 1;
            let inst = Instance::new(&rep).unwrap();
            let got = match class {
                GenClass::Suig => maximal_cliques_2suig(&inst).unwrap(),
                _ => maximal_cliques_2siig(&inst).unwrap(),
            };
            let want = bruteforce_maximal_cliques(&inst.graph).unwrap();
            if named_clique_set(&inst.graph, &got) != named_clique_set(&inst.graph, &want) {
                run.mismatches.push(format!("{class} seed {seed}"));
            }
            if !inst.is_2suig() {
                continue;
            }
            run.labeled_instances += 1;
            let labeling = label_bridge_edges(&inst).unwrap();
            if let Some((c, (e, f))) = got.iter().find_map(|c| mixed_labels(c, &labeling).map(|m| (c, m))) {
                run.label_violations += 1;
                run.first_violation.get_or_insert_with(|| {
                    let g = &inst.graph;
                    format!(
                        "{class} seed {seed}: clique {{{}}} has {}{} label {} and {}{} label {}",
                        names(g, c),
                        g.name(e.0),
                        g.name(e.1),
                        labeling.label(e.0, e.1).unwrap(),
                        g.name(f.0),
                        g.name(f.1),
                        labeling.label(f.0, f.1).unwrap()
                    )
                });
            }
        }
    }
    (run, total)
}

fn proper(c: &Coloring, g: &Graph) -> bool {
    c.covers(g) && c.is_proper(g)
}

fn chi_bounds() -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for class in [GenClass::Sig, GenClass::Siig, GenClass::BridgeTriangleFree2Suig, GenClass::TriangleFree2Suig] {
        for (seed, rep) in corpus(class, 500, 12) {
            count += 1;
            let inst = Instance::new(&rep).unwrap();
            let g = &inst.graph;
            let omega = clique_number(&inst).omega;
            let chi = bruteforce_chromatic(g).unwrap();
            let ok = proper(&color_2sig(&inst), g)
                && omega <= chi
                && match class {
                    GenClass::Sig => chi <= 2 * omega,
                    GenClass::Siig => chi <= omega + 1 && proper(&color_2siig(&inst).unwrap(), g),
                    GenClass::BridgeTriangleFree2Suig => {
                        chi <= omega + 1 && proper(&color_bridge_triangle_free_2suig(&inst).unwrap().coloring, g)
                    }
                    _ => {
                        let c = color_triangle_free_2suig(&inst).unwrap().coloring;
                        let part = StabPartition::from_instance(&inst);
                        proper(&c, g)
                            && c.palette() <= 3
                            && part.bridge_vertices.iter().all(|&v| c.color(v).unwrap() < 2)
                    }
                };
            if !ok {
                bad.push(format!("{class} seed {seed}"));
            }
        }
    }
    verdict(bad.is_empty(), format!("{count} instances, {} violations {:?}", bad.len(), &bad[..bad.len().min(5)]))
}

/// Adjacency of `g` with rows and columns in `labels` order.
fn labeled_adjacency(g: &Graph, labels: &[String]) -> Vec<Vec<bool>> {
    let idx: Vec<usize> = labels.iter().map(|l| g.index_of(l).unwrap()).collect();
    idx.iter().map(|&a| idx.iter().map(|&b| a != b && g.has_edge(a, b)).collect()).collect()
}

fn round_trip(strict: &[(u64, StabRepresentation)]) -> Verdict {
    let mut bad = Vec::new();
    for (seed, rep) in strict {
        let ok = build_issr(rep).ok().filter(|m| is_issr(m).is_ok()).is_some_and(|m| {
            reconstruct_representation(&m).is_ok_and(|back| {
                let (a, b) = (intersection_graph(rep).unwrap(), intersection_graph(&back).unwrap());
                back.validate().is_empty() && labeled_adjacency(&a, &m.labels) == labeled_adjacency(&b, &m.labels)
            })
        });
        if !ok {
            bad.push(*seed);
        }
    }
    verdict(bad.is_empty(), format!("{} strict instances, {} failures {:?}", strict.len(), bad.len(), &bad[..bad.len().min(5)]))
}

fn lemmas(strict: &[(u64, StabRepresentation)]) -> Verdict {
    let general = corpus(GenClass::Suiig, 500, 16);
    let mut bad = Vec::new();
    for (seed, rep) in strict.iter().chain(&general) {
        let v = structural_lemma_violations(&Instance::new(rep).unwrap()).unwrap();
        if let Some(v) = v.first() {
            bad.push(format!("seed {seed} {}: {}", v.lemma, v.detail));
        }
    }
    verdict(
        bad.is_empty(),
        format!("{} instances, {} violations {:?}", strict.len() + general.len(), bad.len(), &bad[..bad.len().min(3)]),
    )
}

fn non_perfect() -> Verdict {
    let rep = presets::c5_2suiig();
    let inst = Instance::new(&rep).unwrap();
    let omega = bruteforce_maximal_cliques(&inst.graph).unwrap().iter().map(Vec::len).max().unwrap_or(0);
    let chi = bruteforce_chromatic(&inst.graph).unwrap();
    let ok = rep.validate().is_empty() && inst.is_2suiig() && inst.graph.n() == 5 && omega == 2 && chi == 3;
    verdict(ok, format!("2SUIIG {}, omega {omega}, chi {chi}", inst.is_2suiig()))
}

fn conversions() -> Verdict {
    let mut bad = Vec::new();
    let two = corpus(GenClass::BridgeTriangleFree2Suig, 250, 16);
    for (seed, rep) in &two {
        let inst = Instance::new(rep).unwrap();
        if !two_interval_representation(&inst).is_ok_and(|t| t.verify(&inst.graph)) {
            bad.push(format!("two-interval seed {seed}"));
        }
    }
    let prop = corpus(GenClass::Proper2Sig, 250, 16);
    for (seed, rep) in &prop {
        let ok = proper_to_unit(rep)
            .is_ok_and(|u| u.is_unit() && intersection_graph(&u).unwrap() == intersection_graph(rep).unwrap());
        if !ok {
            bad.push(format!("proper-to-unit seed {seed}"));
        }
    }
    verdict(bad.is_empty(), format!("{} + {} instances, {} mismatches {bad:?}", two.len(), prop.len(), bad.len()))
}

fn determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_twostab");
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let tw = |args: &[&str]| {
        let out = Command::new(bin).args(args).env("TWOSTAB_NO_COLOR", "1").output().unwrap();
        (out.status.code(), out.stdout)
    };
    for (name, file) in [("fig1", "fig1.json"), ("fig2", "fig2.json"), ("c5", "c5.json")] {
        tw(&["preset", name, "--out", &p(file)]);
    }
    let runs: Vec<(String, Vec<String>, Option<String>)> = vec![
        ("preset".into(), vec!["preset".into(), "fig2".into()], None),
        ("analyze".into(), vec!["analyze".into(), p("fig1.json")], None),
        ("cliques".into(), vec!["cliques".into(), p("fig2.json"), "--verify".into()], None),
        ("matrix --build".into(), vec!["matrix".into(), p("c5.json"), "--build".into(), "--out".into(), p("c5.issr")], Some(p("c5.issr"))),
        ("matrix --check".into(), vec!["matrix".into(), p("c5.issr"), "--check".into()], None),
        ("matrix --reconstruct".into(), vec!["matrix".into(), p("c5.issr"), "--reconstruct".into()], None),
        ("render".into(), vec!["render".into(), p("fig1.json"), "--out".into(), p("fig1.svg")], Some(p("fig1.svg"))),
        ("generate".into(), vec!["generate".into(), "--class".into(), "2SUIIG".into(), "--seed".into(), "7".into(), "--max-n".into(), "12".into()], None),
        ("fuzz".into(), vec!["fuzz".into(), "--class".into(), "2SUIG".into(), "--seeds".into(), "200".into(), "--seed".into(), "3".into()], None),
        ("check".into(), vec!["check".into(), p("fig2.json")], None),
    ];
    let mut differing = Vec::new();
    for (label, args, file) in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let snapshot = || {
            let (code, stdout) = tw(&args);
            let bytes = file.as_ref().map(|f| std::fs::read(Path::new(f)).unwrap_or_default());
            (code, stdout, bytes)
        };
        let (a, b) = (snapshot(), snapshot());
        if a != b || a.0 != Some(0) {
            differing.push(label.clone());
        }
    }
    verdict(differing.is_empty(), format!("{} commands run twice, differing or failing: {differing:?}", runs.len()))
}

type Row = (u32, &'static str, Verdict, Duration, Duration);

fn timed(id: u32, name: &'static str, limit: u64, f: impl FnOnce() -> Verdict) -> Row {
    let t = Instant::now();
    let v = f();
    (id, name, v, t.elapsed(), Duration::from_secs(limit))
}

fn main() {
    let mut results: Vec<Row> = Vec::new();
    results.push(timed(1, "figure fidelity", 1, fidelity));
    let t = Instant::now();
    let (run, total) = clique_corpus();
    let clique_time = t.elapsed();
    results.push((
        2,
        "clique enumeration equals oracle",
        verdict(
            run.mismatches.is_empty(),
            format!("{total} instances, {} mismatches {:?}", run.mismatches.len(), &run.mismatches[..run.mismatches.len().min(5)]),
        ),
        clique_time,
        Duration::from_secs(60),
    ));
    results.push((
        3,
        "label separation in maximal cliques",
        verdict(
            run.label_violations == 0,
            format!(
                "{} labeled instances, {} with a mixed-label clique; first: {}",
                run.labeled_instances,
                run.label_violations,
                run.first_violation.as_deref().unwrap_or("none")
            ),
        ),
        clique_time,
        Duration::from_secs(60),
    ));
    results.push(timed(4, "chromatic bounds", 120, chi_bounds));
    let strict = strict_corpus(500);
    results.push(timed(5, "ISSR round trip", 60, || round_trip(&strict)));
    results.push(timed(6, "structural lemmas", 60, || lemmas(&strict)));
    results.push(timed(7, "non-perfect C5 witness", 1, non_perfect));
    results.push(timed(8, "class conversions", 30, conversions));
    results.push(timed(9, "determinism", 120, determinism));

    let mut failed = 0;
    for (id, name, v, took, limit) in &results {
        let pass = v.pass && took <= limit;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {id} {}: {name}: {} ({:.2} s, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            v.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
