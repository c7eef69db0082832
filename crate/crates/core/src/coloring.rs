//! Colorings realizing the clique-number bounds.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt::Write as _;

use crate::cliques::clique_number;
use crate::graph::Graph;
use crate::partition::{require_bridge_triangle_free, StabPartition};
use crate::rep::{Instance, Side};
use crate::{Error, Result};

/// Vertex → color (0-based). May cover only part of the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    pub colors: BTreeMap<usize, usize>,
}

impl Coloring {
    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    /// Number of distinct colors used.
    pub fn palette(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// No edge of `g` between two colored vertices is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.conflict(g).is_none()
    }

    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().into_iter().find(|&(u, v)| match (self.color(u), self.color(v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }

    pub fn covers(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| self.colors.contains_key(&v))
    }

    /// "vertex color" lines in name order, then "palette <k>".
    pub fn to_text(&self, g: &Graph) -> String {
        let mut rows: Vec<(&str, usize)> = self.colors.iter().map(|(&v, &c)| (g.name(v), c)).collect();
        rows.sort();
        let mut s = String::new();
        for (name, c) in rows {
            let _ = writeln!(s, "{name} {c}");
        }
        let _ = writeln!(s, "palette {}", self.palette());
        s
    }
}

/// Left-to-right sweep over one side, reusing the smallest freed color.
/// Uses exactly `ω` of the side.
pub fn greedy_interval_coloring(inst: &Instance, side: Side) -> Coloring {
    let mut vs = inst.side_vertices(side);
    inst.sort_left(&mut vs);
    // Active intervals by right end; closed intervals touching at a point
    // are adjacent, so an interval is released only once strictly passed.
    let mut active: BinaryHeap<Reverse<(crate::Rational, usize)>> = BinaryHeap::new();
    let mut free: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let mut next = 0;
    let mut out = Coloring::default();
    for v in vs {
        let x = inst.rect(v).x_left;
        while let Some(&Reverse((end, w))) = active.peek() {
            if end >= x {
                break;
            }
            active.pop();
            free.push(Reverse(out.colors[&w]));
        }
        let c = match free.pop() {
            Some(Reverse(c)) => c,
            None => {
                next += 1;
                next - 1
            }
        };
        out.colors.insert(v, c);
        active.push(Reverse((inst.rect(v).x_right, v)));
    }
    out
}

/// Disjoint palettes for the two sides.
pub fn color_2sig(inst: &Instance) -> Coloring {
    let lower = greedy_interval_coloring(inst, Side::Lower);
    let upper = greedy_interval_coloring(inst, Side::Upper);
    let offset = lower.palette();
    let mut out = lower;
    out.colors.extend(upper.colors.into_iter().map(|(v, c)| (v, c + offset)));
    out
}

/// Lower side by sweep, every upper vertex one extra shared color.
pub fn color_2siig(inst: &Instance) -> Result<Coloring> {
    inst.require_2siig()?;
    let mut out = greedy_interval_coloring(inst, Side::Lower);
    let extra = out.palette();
    for v in inst.side_vertices(Side::Upper) {
        out.colors.insert(v, extra);
    }
    Ok(out)
}

/// How a triangle-free coloring was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringPath {
    /// Bridges inserted left to right with component swaps and odd-cycle repair.
    Inductive,
    /// Backtracking search with bridge vertices restricted to colors 0 and 1.
    ExactFallback,
}

#[derive(Clone, Debug)]
pub struct TriangleFreeColoring {
    pub coloring: Coloring,
    pub path: ColoringPath,
}

/// Proper 3-coloring of a triangle-free 2SUIG with bridge vertices in {0, 1}.
pub fn color_triangle_free_2suig(inst: &Instance) -> Result<TriangleFreeColoring> {
    inst.require_2suig()?;
    if let Some(t) = inst.graph.triangles().first() {
        return Err(Error::HasTriangle(t.map(|v| inst.name(v).to_string())));
    }
    let part = StabPartition::from_instance(inst);
    if let Some(c) = inductive(inst, &part) {
        if valid_tf(inst, &part, &c) {
            return Ok(TriangleFreeColoring { coloring: c, path: ColoringPath::Inductive });
        }
    }
    match exact_tf(inst, &part) {
        Some(c) => Ok(TriangleFreeColoring { coloring: c, path: ColoringPath::ExactFallback }),
        None => Err(Error::NoColoring("no 3-coloring with 2-colored bridge vertices".into())),
    }
}

fn valid_tf(inst: &Instance, part: &StabPartition, c: &Coloring) -> bool {
    c.covers(&inst.graph)
        && c.is_proper(&inst.graph)
        && c.colors.values().all(|&x| x < 3)
        && part.bridge_vertices.iter().all(|&v| c.colors[&v] < 2)
}

/// Bridges sorted by the left ends of their lower, then upper endpoints.
fn bridge_order(inst: &Instance, part: &StabPartition) -> Vec<(usize, usize)> {
    let mut es = part.bridge_edges.clone();
    es.sort_by(|&(u, v), &(u2, v2)| {
        let key = |a: usize, b: usize| (inst.rect(a).x_left, inst.rect(b).x_left, a, b);
        key(u, v).cmp(&key(u2, v2))
    });
    es
}

fn inductive(inst: &Instance, part: &StabPartition) -> Option<Coloring> {
    let n = inst.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in inst.graph.edges() {
        if inst.sides[u] == inst.sides[v] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    // Sides without bridges are disjoint paths: 2-color by BFS.
    let mut col: Vec<Option<usize>> = vec![None; n];
    for s in 0..n {
        if col[s].is_some() {
            continue;
        }
        col[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                match col[y] {
                    None => {
                        col[y] = Some(1 - col[x].unwrap());
                        q.push_back(y);
                    }
                    Some(c) if c == col[x].unwrap() => return None,
                    _ => {}
                }
            }
        }
    }
    let mut col: Vec<usize> = col.into_iter().map(Option::unwrap).collect();

    let mut left: Vec<usize> = (0..n).collect();
    inst.sort_left(&mut left);
    for (u, v) in bridge_order(inst, part) {
        if col[u] != col[v] {
            adj[u].push(v);
            adj[v].push(u);
            continue;
        }
        let comp_v = component(&adj, v, None);
        if !comp_v.contains(&u) {
            for &x in &comp_v {
                col[x] = swap01(col[x]);
            }
        } else {
            // Odd cycle through (u, v): give a non-bridge cycle vertex the
            // third color and swap the side of the cycle it cuts off.
            let path = shortest_path(&adj, u, v)?;
            let mut candidates: Vec<usize> =
                path.iter().copied().filter(|&w| !part.is_bridge_vertex(w)).collect();
            candidates.sort_by_key(|w| left.iter().position(|x| x == w));
            let mut repaired = false;
            for w in candidates {
                if adj[w].iter().any(|&y| col[y] == 2) {
                    continue;
                }
                let mut with_e = adj.clone();
                with_e[u].push(v);
                with_e[v].push(u);
                let c = component(&with_e, v, Some(w));
                if c.contains(&u) {
                    continue;
                }
                for &x in &c {
                    col[x] = swap01(col[x]);
                }
                col[w] = 2;
                repaired = true;
                break;
            }
            if !repaired {
                return None;
            }
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Some(Coloring { colors: col.into_iter().enumerate().collect() })
}

fn swap01(c: usize) -> usize {
    match c {
        0 => 1,
        1 => 0,
        c => c,
    }
}

fn component(adj: &[Vec<usize>], s: usize, skip: Option<usize>) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([s]);
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if Some(y) != skip && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

fn shortest_path(adj: &[Vec<usize>], s: usize, t: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        if x == t {
            let mut path = vec![t];
            let mut c = t;
            while c != s {
                c = prev[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    None
}

fn exact_tf(inst: &Instance, part: &StabPartition) -> Option<Coloring> {
    let mut order: Vec<usize> = (0..inst.n()).collect();
    inst.sort_left(&mut order);
    let domain = |v: usize| if part.is_bridge_vertex(v) { 2 } else { 3 };
    let mut col: Vec<Option<usize>> = vec![None; inst.n()];
    fn go(
        i: usize,
        order: &[usize],
        g: &Graph,
        domain: &dyn Fn(usize) -> usize,
        col: &mut [Option<usize>],
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..domain(v) {
            if g.neighbors(v).all(|w| col[w] != Some(c)) {
                col[v] = Some(c);
                if go(i + 1, order, g, domain, col) {
                    return true;
                }
            }
        }
        col[v] = None;
        false
    }
    go(0, &order, &inst.graph, &domain, &mut col)
        .then(|| Coloring { colors: col.into_iter().map(Option::unwrap).enumerate().collect() })
}

/// Result of the independent-set peeling for bridge-triangle-free 2SUIG.
#[derive(Clone, Debug)]
pub struct PeeledColoring {
    pub coloring: Coloring,
    /// Independent sets removed before the triangle-free base.
    pub rounds: usize,
    pub base_path: ColoringPath,
    pub omega: usize,
    /// Palette exceeds `ω + 1`.
    pub exceeds_bound: bool,
}

/// Removes greedy maximal independent sets (left to right over both sides)
/// until the rest is triangle-free, one fresh color each, and colors the
/// rest with [`color_triangle_free_2suig`].
pub fn color_bridge_triangle_free_2suig(inst: &Instance) -> Result<PeeledColoring> {
    inst.require_2suig()?;
    let part = StabPartition::from_instance(inst);
    require_bridge_triangle_free(inst, &part)?;

    let mut remaining: Vec<usize> = (0..inst.n()).collect();
    inst.sort_left(&mut remaining);
    let mut peeled: Vec<Vec<usize>> = Vec::new();
    while !inst.graph.induced(&remaining).triangles().is_empty() {
        let mut mis: Vec<usize> = Vec::new();
        for &v in &remaining {
            if mis.iter().all(|&w| !inst.graph.has_edge(v, w)) {
                mis.push(v);
            }
        }
        remaining.retain(|v| !mis.contains(v));
        peeled.push(mis);
    }

    let base_inst = Instance::new(&inst.rep.restrict(&remaining))?;
    let base = color_triangle_free_2suig(&base_inst)?;
    let mut coloring = Coloring::default();
    let base_palette = 3;
    for (i, &v) in remaining.iter().enumerate() {
        coloring.colors.insert(v, base.coloring.colors[&i]);
    }
    for (k, set) in peeled.iter().enumerate() {
        for &v in set {
            coloring.colors.insert(v, base_palette + k);
        }
    }
    let coloring = compact(coloring);
    let omega = clique_number(inst).omega;
    let exceeds_bound = coloring.palette() > omega + 1;
    Ok(PeeledColoring { rounds: peeled.len(), base_path: base.path, omega, exceeds_bound, coloring })
}

/// Renumbers colors to `0..palette` preserving their order.
fn compact(c: Coloring) -> Coloring {
    let used: Vec<usize> = c.colors.values().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let colors = c
        .colors
        .into_iter()
        .map(|(v, x)| (v, used.binary_search(&x).expect("used color")))
        .collect();
    Coloring { colors }
}

/// `max(χ1, χ2) ≤ χ ≤ χ1 + χ2` from the per-side sweeps.
pub fn chromatic_bounds(inst: &Instance) -> (usize, usize) {
    let a = greedy_interval_coloring(inst, Side::Lower).palette();
    let b = greedy_interval_coloring(inst, Side::Upper).palette();
    (a.max(b), a + b)
}
