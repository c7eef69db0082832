//! Property checks run by `fuzz` and `check`: every algorithm that applies
//! to an instance is compared against the brute-force oracles and the
//! bounds it promises.

use serde::Serialize;
use twostab::cliques::{
    clique_number, label_bridge_edges, maximal_cliques_2siig, maximal_cliques_general, maximal_cliques_labeled,
    mixed_labels, BridgeLabeling,
};
use twostab::coloring::{
    color_2sig, color_2siig, color_bridge_triangle_free_2suig, color_triangle_free_2suig, Coloring,
};
use twostab::matrix::{build_issr, is_issr, is_strict_partition, reconstruct_representation, structural_lemma_violations};
use twostab::oracle::{
    bruteforce_chromatic, bruteforce_maximal_cliques, named_clique_set, proper_to_unit, two_interval_representation,
    CHROMATIC_LIMIT, CLIQUE_LIMIT,
};
use twostab::partition::find_bridge_triangles;
use twostab::rep::intersection_graph;
use twostab::{Graph, Instance, StabPartition, StabRepresentation};

/// Deliberate defects for exercising the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Drops the highest label class from the bridge labeling before
    /// enumerating cliques.
    FaultyLabeling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub checks: Vec<&'static str>,
    pub failure: Option<Finding>,
    /// A maximal clique holding bridge edges with different labels. Logged,
    /// not fatal: the separation claim fails on valid instances.
    pub label_counterexample: Option<String>,
}

fn fail(check: &'static str, detail: impl Into<String>) -> Result<(), Finding> {
    Err(Finding { check, detail: detail.into() })
}

fn proper(check: &'static str, c: &Coloring, g: &Graph) -> Result<(), Finding> {
    if !c.covers(g) {
        return fail(check, "coloring misses a vertex");
    }
    match c.conflict(g) {
        Some((u, v)) => fail(check, format!("{} and {} share a color", g.name(u), g.name(v))),
        None => Ok(()),
    }
}

fn sabotage(labeling: &mut BridgeLabeling) {
    if let Some(&top) = labeling.classes().keys().last() {
        labeling.labels.retain(|_, l| *l != top);
    }
}

pub fn check_representation(rep: &StabRepresentation, fault: Option<Fault>) -> Outcome {
    let mut out = Outcome::default();
    if let Err(f) = run(rep, fault, &mut out) {
        out.failure = Some(f);
    }
    out
}

fn run(rep: &StabRepresentation, fault: Option<Fault>, out: &mut Outcome) -> Result<(), Finding> {
    out.checks.push("validate");
    if let Some(v) = rep.validate().first() {
        return fail("validate", format!("{v:?}"));
    }
    let inst = Instance::new(rep).map_err(|e| Finding { check: "validate", detail: e.to_string() })?;
    let g = &inst.graph;
    let n = inst.n();
    let part = StabPartition::from_instance(&inst);
    let unit = inst.is_2suig();
    let independent = inst.is_2siig();
    let triangle_free = g.triangles().is_empty();
    let bridge_tf = find_bridge_triangles(g, &part).is_empty();
    let cn = clique_number(&inst);
    let omega = cn.omega;

    if n <= CLIQUE_LIMIT {
        out.checks.push("cliques");
        let oracle = bruteforce_maximal_cliques(g).expect("size checked");
        let want = named_clique_set(g, &oracle);
        let mut runs = vec![("general", maximal_cliques_general(&inst))];
        if unit {
            let mut labeling =
                label_bridge_edges(&inst).map_err(|e| Finding { check: "labeling", detail: e.to_string() })?;
            if fault == Some(Fault::FaultyLabeling) {
                sabotage(&mut labeling);
            }
            let got = maximal_cliques_labeled(&inst, &labeling);
            if out.label_counterexample.is_none() {
                out.label_counterexample = got.iter().find_map(|c| {
                    mixed_labels(c, &labeling).map(|((a, b), (x, y))| {
                        let names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
                        format!(
                            "clique {{{}}} holds {}{} (label {}) and {}{} (label {})",
                            names.join(", "),
                            g.name(a),
                            g.name(b),
                            labeling.label(a, b).unwrap_or(0),
                            g.name(x),
                            g.name(y),
                            labeling.label(x, y).unwrap_or(0)
                        )
                    })
                });
            }
            runs.push(("2suig", got));
        }
        if independent {
            runs.push(("2siig", maximal_cliques_2siig(&inst).expect("class checked")));
        }
        for (name, got) in runs {
            let got = named_clique_set(g, &got);
            if got != want {
                let missing = want.difference(&got).count();
                let extra = got.difference(&want).count();
                return fail("cliques", format!("{name} enumeration: {missing} missing, {extra} extra"));
            }
        }
        let oracle_omega = oracle.iter().map(Vec::len).max().unwrap_or(0);
        if omega != oracle_omega || cn.lower_bound > omega || omega > cn.upper_bound {
            return fail("clique-bounds", format!("{cn:?} against oracle omega {oracle_omega}"));
        }
    }

    out.checks.push("coloring");
    let c = color_2sig(&inst);
    proper("coloring", &c, g)?;
    if c.palette() > 2 * omega {
        return fail("coloring", format!("2SIG coloring uses {} > 2 omega = {}", c.palette(), 2 * omega));
    }
    if independent {
        let c = color_2siig(&inst).map_err(|e| Finding { check: "coloring", detail: e.to_string() })?;
        proper("coloring", &c, g)?;
        if c.palette() > omega + 1 {
            return fail("coloring", format!("2SIIG coloring uses {} > omega + 1 = {}", c.palette(), omega + 1));
        }
    }
    if unit && triangle_free {
        let c = color_triangle_free_2suig(&inst).map_err(|e| Finding { check: "coloring", detail: e.to_string() })?;
        proper("coloring", &c.coloring, g)?;
        if c.coloring.palette() > 3 {
            return fail("coloring", format!("triangle-free coloring uses {} colors", c.coloring.palette()));
        }
        if let Some(&v) = part.bridge_vertices.iter().find(|&&v| c.coloring.color(v).is_some_and(|k| k > 1)) {
            return fail("coloring", format!("bridge vertex {} has the third color", g.name(v)));
        }
    }
    if unit && bridge_tf {
        let p = color_bridge_triangle_free_2suig(&inst)
            .map_err(|e| Finding { check: "coloring", detail: e.to_string() })?;
        proper("coloring", &p.coloring, g)?;
    }

    if n <= CHROMATIC_LIMIT {
        out.checks.push("chromatic");
        let chi = bruteforce_chromatic(g).expect("size checked");
        let mut bound = 2 * omega;
        if independent || (unit && bridge_tf) {
            bound = bound.min(omega + 1);
        }
        if unit && triangle_free {
            bound = bound.min(3);
        }
        if chi < omega || chi > bound {
            return fail("chromatic", format!("chi = {chi} outside [{omega}, {bound}]"));
        }
    }

    if unit && bridge_tf {
        out.checks.push("two-interval");
        let t = two_interval_representation(&inst).map_err(|e| Finding { check: "two-interval", detail: e.to_string() })?;
        if !t.verify(g) {
            return fail("two-interval", "intersection graph differs");
        }
    }
    if rep.flags.proper && rep.is_proper() {
        out.checks.push("proper-to-unit");
        let u = proper_to_unit(rep).map_err(|e| Finding { check: "proper-to-unit", detail: e.to_string() })?;
        if !u.is_unit() || intersection_graph(&u).ok().as_ref() != Some(g) {
            return fail("proper-to-unit", "unit representation changes the graph");
        }
    }
    if unit && independent {
        out.checks.push("lemmas");
        let v = structural_lemma_violations(&inst).map_err(|e| Finding { check: "lemmas", detail: e.to_string() })?;
        if let Some(v) = v.first() {
            return fail("lemmas", format!("{}: {}", v.lemma, v.detail));
        }
        if is_strict_partition(rep).unwrap_or(false) {
            out.checks.push("issr");
            let m = build_issr(rep).map_err(|e| Finding { check: "issr", detail: e.to_string() })?;
            if let Err(v) = is_issr(&m) {
                return fail("issr", v.to_string());
            }
            let back = reconstruct_representation(&m).map_err(|e| Finding { check: "issr", detail: e.to_string() })?;
            if intersection_graph(&back).ok().as_ref() != Some(g) {
                return fail("issr", "reconstruction changes the graph");
            }
        }
    }
    Ok(())
}

/// Greedily deletes rectangles while the same check keeps failing.
pub fn minimize(rep: &StabRepresentation, check: &'static str, fault: Option<Fault>) -> StabRepresentation {
    let mut cur = rep.clone();
    let mut i = 0;
    while i < cur.len() {
        let keep: Vec<usize> = (0..cur.len()).filter(|&j| j != i).collect();
        let smaller = cur.restrict(&keep);
        match check_representation(&smaller, fault).failure {
            Some(f) if f.check == check => cur = smaller,
            _ => i += 1,
        }
    }
    cur
}
