//! Bridge-edge labeling and maximal clique enumeration.
//!
//! Axis-parallel boxes have the Helly property, so every clique of a 2-stab
//! representation shares a common point, and the lower-left corner of that
//! common box is `(x_left of some member, y_bottom of some member)`. Closing
//! a set of vertices under "all rectangles containing a corner point" is how
//! bicliques of bridge edges are completed to cliques of the whole graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::interval::{complement_orientation, interval_maximal_cliques, sweep_cliques, OrientedComplement};
use crate::partition::StabPartition;
use crate::rational::Rational;
use crate::rep::{Instance, Side};
use crate::{Error, Result};

/// Vertex sets, each sorted by index.
pub type CliqueList = Vec<Vec<usize>>;

/// `PBV(v)`: bridge vertices on `v`'s side with an arc path to `v` that
/// passes through no other bridge vertex.
pub fn preceding_bridge_vertices(
    v: usize,
    orient: &OrientedComplement,
    part: &StabPartition,
) -> Result<BTreeSet<usize>> {
    if !part.is_bridge_vertex(v) {
        return Err(Error::NotBridgeVertex(v.to_string()));
    }
    let mut preds: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &orient.arcs {
        preds.entry(b).or_default().push(a);
    }
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &p in preds.get(&x).into_iter().flatten() {
            if !seen.insert(p) {
                continue;
            }
            if part.is_bridge_vertex(p) {
                out.insert(p);
            } else {
                stack.push(p);
            }
        }
    }
    Ok(out)
}

/// Labels `[e]` of the bridge edges, keyed `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeLabeling {
    pub labels: BTreeMap<(usize, usize), usize>,
}

impl BridgeLabeling {
    pub fn label(&self, lower: usize, upper: usize) -> Option<usize> {
        self.labels.get(&(lower, upper)).copied()
    }

    /// `E_B^i` for every label in use.
    pub fn classes(&self) -> BTreeMap<usize, Vec<(usize, usize)>> {
        let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (&e, &l) in &self.labels {
            out.entry(l).or_default().push(e);
        }
        out
    }
}

/// `[e] = 0` when neither endpoint has a preceding bridge vertex, otherwise
/// one more than the largest label among bridge edges with an endpoint
/// strictly left (by an arc of the same side's orientation) of the
/// corresponding endpoint of `e`.
pub fn label_bridge_edges(inst: &Instance) -> Result<BridgeLabeling> {
    inst.require_2suig()?;
    let part = StabPartition::from_instance(inst);
    let lo = complement_orientation(inst, Side::Lower);
    let up = complement_orientation(inst, Side::Upper);
    let edges = &part.bridge_edges;

    let mut base = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        let pu = preceding_bridge_vertices(u, &lo, &part)?;
        let pv = preceding_bridge_vertices(v, &up, &part)?;
        base.push(pu.is_empty() && pv.is_empty());
    }
    let left_of = |f: usize, e: usize| {
        let ((u2, v2), (u, v)) = (edges[f], edges[e]);
        lo.has_arc(u2, u) || up.has_arc(v2, v)
    };

    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; edges.len()];
    let mut label = vec![0usize; edges.len()];
    fn visit(
        e: usize,
        base: &[bool],
        left_of: &dyn Fn(usize, usize) -> bool,
        state: &mut [u8],
        label: &mut [usize],
    ) -> std::result::Result<(), usize> {
        match state[e] {
            2 => return Ok(()),
            1 => return Err(e),
            _ => {}
        }
        state[e] = 1;
        let mut best: Option<usize> = None;
        for f in 0..base.len() {
            if f != e && left_of(f, e) {
                visit(f, base, left_of, state, label)?;
                best = Some(best.map_or(label[f], |b: usize| b.max(label[f])));
            }
        }
        label[e] = if base[e] { 0 } else { best.map_or(0, |b| b + 1) };
        state[e] = 2;
        Ok(())
    }
    for e in 0..edges.len() {
        visit(e, &base, &left_of, &mut state, &mut label).map_err(|c| {
            let (u, v) = edges[c];
            Error::LabelCycle((inst.name(u).to_string(), inst.name(v).to_string()))
        })?;
    }
    Ok(BridgeLabeling { labels: edges.iter().copied().zip(label).collect() })
}

/// All vertices whose rectangle contains the corner point `(x, y)`.
fn at_point(inst: &Instance, x: Rational, y: Rational) -> Vec<usize> {
    (0..inst.n())
        .filter(|&v| {
            let r = inst.rect(v);
            r.x_left <= x && x <= r.x_right && r.y_bottom <= y && y <= r.top()
        })
        .collect()
}

/// Cliques of the graph containing all of `core`: point closures over the
/// corners generated by the common neighbourhood of `core`.
fn point_closures(inst: &Instance, core: &[usize]) -> Vec<Vec<usize>> {
    let cand: Vec<usize> = (0..inst.n())
        .filter(|&w| core.iter().all(|&c| c == w || inst.graph.has_edge(c, w)))
        .collect();
    let xs: BTreeSet<Rational> = cand.iter().map(|&v| inst.rect(v).x_left).collect();
    let ys: BTreeSet<Rational> = cand.iter().map(|&v| inst.rect(v).y_bottom).collect();
    let mut out = BTreeSet::new();
    for &x in &xs {
        for &y in &ys {
            let s = at_point(inst, x, y);
            if core.iter().all(|c| s.contains(c)) {
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}

fn finish(g: &Graph, cliques: impl IntoIterator<Item = Vec<usize>>) -> CliqueList {
    let set: BTreeSet<Vec<usize>> = cliques
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .filter(|c| g.is_maximal_clique(c))
        .collect();
    set.into_iter().collect()
}

/// Maximal cliques of the graph that contain an edge of `E_B^i`: each bridge
/// edge of the class is closed to cliques through common points, then
/// filtered for maximality.
pub fn label_class_cliques(inst: &Instance, labeling: &BridgeLabeling, i: usize) -> CliqueList {
    let class: Vec<(usize, usize)> =
        labeling.labels.iter().filter(|(_, &l)| l == i).map(|(&e, _)| e).collect();
    finish(&inst.graph, class.iter().flat_map(|&(u, v)| point_closures(inst, &[u, v])))
}

pub fn maximal_cliques_2suig(inst: &Instance) -> Result<CliqueList> {
    let labeling = label_bridge_edges(inst)?;
    Ok(maximal_cliques_labeled(inst, &labeling))
}

/// Side cliques plus every label class, deduplicated and maximal in the graph.
pub fn maximal_cliques_labeled(inst: &Instance, labeling: &BridgeLabeling) -> CliqueList {
    let mut all = interval_maximal_cliques(inst, Side::Lower);
    all.extend(interval_maximal_cliques(inst, Side::Upper));
    for &i in labeling.classes().keys() {
        all.extend(label_class_cliques(inst, labeling, i));
    }
    finish(&inst.graph, all)
}

/// Lower sweep cliques, upper singletons, and for each upper `v` the sweep
/// cliques of `N_B(v)` extended by `v`.
pub fn maximal_cliques_2siig(inst: &Instance) -> Result<CliqueList> {
    inst.require_2siig()?;
    let part = StabPartition::from_instance(inst);
    let mut all = interval_maximal_cliques(inst, Side::Lower);
    for &v in &part.upper {
        let nb = part.bridge_neighbors_of(v);
        if nb.is_empty() {
            all.push(vec![v]);
        }
        for mut c in sweep_cliques(inst, &nb) {
            c.push(v);
            all.push(c);
        }
    }
    Ok(finish(&inst.graph, all))
}

/// Any valid representation: point closures over all corners.
pub fn maximal_cliques_general(inst: &Instance) -> CliqueList {
    finish(&inst.graph, point_closures(inst, &[]))
}

/// Enumerates with the most specific applicable algorithm.
pub fn maximal_cliques(inst: &Instance) -> CliqueList {
    if inst.is_2siig() {
        maximal_cliques_2siig(inst).expect("class checked")
    } else if inst.is_2suig() {
        maximal_cliques_2suig(inst).unwrap_or_else(|_| maximal_cliques_general(inst))
    } else {
        maximal_cliques_general(inst)
    }
}

/// `ω` and the bounds `max(ω1, ω2) ≤ ω ≤ ω1 + ω2` from the sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueNumber {
    pub omega: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
}

pub fn clique_number(inst: &Instance) -> CliqueNumber {
    let side_omega =
        |s| interval_maximal_cliques(inst, s).iter().map(Vec::len).max().unwrap_or(0);
    let (w1, w2) = (side_omega(Side::Lower), side_omega(Side::Upper));
    let omega = maximal_cliques(inst).iter().map(Vec::len).max().unwrap_or(0);
    CliqueNumber { omega, lower_bound: w1.max(w2), upper_bound: w1 + w2 }
}

/// Two bridge edges of `clique` with different labels, if any.
pub fn mixed_labels(
    clique: &[usize],
    labeling: &BridgeLabeling,
) -> Option<((usize, usize), (usize, usize))> {
    let inside: Vec<((usize, usize), usize)> = labeling
        .labels
        .iter()
        .filter(|((u, v), _)| clique.contains(u) && clique.contains(v))
        .map(|(&e, &l)| (e, l))
        .collect();
    let (e0, l0) = *inside.first()?;
    inside.iter().find(|&&(_, l)| l != l0).map(|&(e, _)| (e0, e))
}

/// One clique per line, names sorted within a line, lines sorted.
pub fn canonical_lines(g: &Graph, cliques: &[Vec<usize>]) -> Vec<String> {
    let mut lines: Vec<String> = cliques
        .iter()
        .map(|c| {
            let mut names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
            names.sort_unstable();
            names.join(" ")
        })
        .collect();
    lines.sort();
    lines
}

pub fn format_cliques(g: &Graph, cliques: &[Vec<usize>]) -> String {
    canonical_lines(g, cliques).iter().map(|l| format!("{l}\n")).collect()
}
