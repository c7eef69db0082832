use crate::graph::Graph;
use crate::partition::{require_bridge_triangle_free, StabPartition};
use crate::placement::unit_positions;
use crate::rational::Rational;
use crate::rep::{Instance, Side, StabRepresentation, UnitRect};
use crate::{Error, Result};

/// Each vertex owns one or two closed intervals; two vertices are adjacent
/// iff some interval of one meets some interval of the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoIntervalRepresentation {
    pub names: Vec<String>,
    pub intervals: Vec<Vec<(Rational, Rational)>>,
}

impl TwoIntervalRepresentation {
    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::new(self.names.iter().cloned()).expect("distinct names");
        let meets = |a: &(Rational, Rational), b: &(Rational, Rational)| a.0 <= b.1 && b.0 <= a.1;
        for i in 0..self.names.len() {
            for j in i + 1..self.names.len() {
                if self.intervals[i].iter().any(|a| self.intervals[j].iter().any(|b| meets(a, b))) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn verify(&self, g: &Graph) -> bool {
        self.intervals.iter().all(|iv| !iv.is_empty() && iv.len() <= 2) && self.intersection_graph() == *g
    }
}

/// First intervals: the x-projections, upper side shifted clear of the lower
/// side. Second intervals: the bridge graph, a disjoint union of paths,
/// laid out as chains of touching intervals in a fresh region; vertices off
/// the bridge graph get distinct isolated points there.
pub fn two_interval_representation(inst: &Instance) -> Result<TwoIntervalRepresentation> {
    inst.require_2suig()?;
    let part = StabPartition::from_instance(inst);
    require_bridge_triangle_free(inst, &part)?;

    let n = inst.n();
    let two = Rational::int(2);
    let max_right = (0..n).map(|v| inst.rect(v).x_right).max().unwrap_or(Rational::ZERO);
    let min_left = (0..n).map(|v| inst.rect(v).x_left).min().unwrap_or(Rational::ZERO);
    let shift = max_right - min_left + two;
    let mut intervals: Vec<Vec<(Rational, Rational)>> = (0..n)
        .map(|v| {
            let r = inst.rect(v);
            let d = if inst.sides[v] == Side::Upper { shift } else { Rational::ZERO };
            vec![(r.x_left + d, r.x_right + d)]
        })
        .collect();

    let mut nb: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &part.bridge_edges {
        nb[u].push(v);
        nb[v].push(u);
    }
    if let Some(v) = (0..n).find(|&v| nb[v].len() > 2) {
        return Err(Error::BridgeGraphNotPaths(format!("{:?} has {} bridge neighbors", inst.name(v), nb[v].len())));
    }

    let mut cursor = max_right + shift + two;
    let mut done = vec![false; n];
    let mut ends: Vec<usize> = (0..n).filter(|&v| nb[v].len() == 1).collect();
    inst.sort_left(&mut ends);
    for start in ends {
        if done[start] {
            continue;
        }
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            done[cur] = true;
            intervals[cur].push((cursor, cursor + two));
            cursor += two;
            match nb[cur].iter().copied().find(|&w| w != prev) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        cursor += two;
    }
    if let Some(v) = (0..n).find(|&v| !nb[v].is_empty() && !done[v]) {
        return Err(Error::BridgeGraphNotPaths(format!("{:?} lies on a cycle of bridge edges", inst.name(v))));
    }
    for v in 0..n {
        if nb[v].is_empty() {
            intervals[v].push((cursor, cursor));
            cursor += two;
        }
    }
    Ok(TwoIntervalRepresentation { names: inst.graph.names().to_vec(), intervals })
}

/// Unit squares with the same intersection graph: x-projections of all
/// vertices, in one global left-to-right order, are re-placed as unit
/// intervals with the same overlaps; y-coordinates are kept.
pub fn proper_to_unit(rep: &StabRepresentation) -> Result<StabRepresentation> {
    let inst = Instance::new(rep)?;
    if !rep.flags.proper || !rep.is_proper() {
        return Err(Error::ClassMismatch {
            class: "proper 2SIG",
            reason: if rep.flags.proper {
                "an x-projection properly contains another".into()
            } else {
                "proper flag not set".into()
            },
        });
    }
    let n = inst.n();
    let mut order: Vec<usize> = (0..n).collect();
    inst.sort_left(&mut order);
    let overlaps = |a: usize, b: usize| inst.rect(a).x_overlaps(inst.rect(b));
    let mut last = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = i;
        while l + 1 < n && overlaps(order[i], order[l + 1]) {
            l += 1;
        }
        last.push(l.max(last.last().copied().unwrap_or(0)));
    }
    let xs = unit_positions(&last).ok_or_else(|| Error::ClassMismatch {
        class: "proper 2SIG",
        reason: "x-projections admit no unit placement".into(),
    })?;
    let mut out = rep.clone();
    out.flags.unit_squares = true;
    out.flags.proper = true;
    for (pos, &v) in order.iter().enumerate() {
        let r = &rep.rects[v];
        out.rects[v] = UnitRect { x_right: xs[pos] + Rational::ONE, x_left: xs[pos], ..r.clone() };
    }
    Ok(out)
}
