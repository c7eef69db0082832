//! Lower/upper partition and bridge structure.

use crate::graph::Graph;
use crate::rep::{Instance, Side, StabRepresentation};
use crate::{Error, Result};

/// `V1 ⊔ V2` with bridge edges `E_B` (stored lower endpoint first) and
/// bridge vertices `V_B`. All sets hold vertex indices in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabPartition {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub bridge_edges: Vec<(usize, usize)>,
    pub bridge_vertices: Vec<usize>,
    sides: Vec<Side>,
}

impl StabPartition {
    pub fn from_instance(inst: &Instance) -> Self {
        let lower = inst.side_vertices(Side::Lower);
        let upper = inst.side_vertices(Side::Upper);
        let mut bridge_edges = Vec::new();
        for &u in &lower {
            for &v in &upper {
                if inst.graph.has_edge(u, v) {
                    bridge_edges.push((u, v));
                }
            }
        }
        let mut bridge_vertices: Vec<usize> =
            bridge_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        bridge_vertices.sort_unstable();
        bridge_vertices.dedup();
        StabPartition { lower, upper, bridge_edges, bridge_vertices, sides: inst.sides.clone() }
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn is_bridge_edge(&self, u: usize, v: usize) -> bool {
        let e = if self.sides[u] == Side::Lower { (u, v) } else { (v, u) };
        self.bridge_edges.binary_search(&e).is_ok()
    }

    pub fn is_bridge_vertex(&self, v: usize) -> bool {
        self.bridge_vertices.binary_search(&v).is_ok()
    }

    /// `N_B(v)` by index.
    pub fn bridge_neighbors_of(&self, v: usize) -> Vec<usize> {
        self.bridge_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn partition(rep: &StabRepresentation) -> Result<StabPartition> {
    Ok(StabPartition::from_instance(&Instance::new(rep)?))
}

/// `N_B(v)` by name, sorted by name.
pub fn bridge_neighbors(part: &StabPartition, graph: &Graph, v: &str) -> Result<Vec<String>> {
    let i = graph.index_of(v)?;
    let mut out: Vec<String> =
        part.bridge_neighbors_of(i).into_iter().map(|u| graph.name(u).to_string()).collect();
    out.sort();
    Ok(out)
}

/// Triangles with exactly two bridge edges, as sorted index triples.
pub fn find_bridge_triangles(graph: &Graph, part: &StabPartition) -> Vec<[usize; 3]> {
    graph
        .triangles()
        .into_iter()
        .filter(|&[a, b, c]| {
            let k = [(a, b), (a, c), (b, c)]
                .iter()
                .filter(|&&(x, y)| part.is_bridge_edge(x, y))
                .count();
            k == 2
        })
        .collect()
}

pub(crate) fn require_bridge_triangle_free(inst: &Instance, part: &StabPartition) -> Result<()> {
    match find_bridge_triangles(&inst.graph, part).first() {
        None => Ok(()),
        Some(t) => Err(Error::BridgeTriangle(t.map(|v| inst.name(v).to_string()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::{r, Rational};
    use crate::rep::UnitRect;

    fn names(inst: &Instance, vs: &[usize]) -> Vec<String> {
        let mut out: Vec<String> = vs.iter().map(|&v| inst.name(v).to_string()).collect();
        out.sort();
        out
    }

    fn named_bridges(inst: &Instance, part: &StabPartition) -> Vec<String> {
        let mut out: Vec<String> = part
            .bridge_edges
            .iter()
            .map(|&(u, v)| format!("{}{}", inst.name(u), inst.name(v)))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fig1_partition() {
        let inst = Instance::new(&presets::fig1()).unwrap();
        let part = StabPartition::from_instance(&inst);
        assert_eq!(names(&inst, &part.lower), ["a", "b"]);
        assert_eq!(names(&inst, &part.upper), ["c", "d", "e"]);
        assert_eq!(named_bridges(&inst, &part), ["ae", "bc"]);
        assert_eq!(names(&inst, &part.bridge_vertices), ["a", "b", "c", "e"]);
        assert_eq!(bridge_neighbors(&part, &inst.graph, "a").unwrap(), ["e"]);
        assert_eq!(bridge_neighbors(&part, &inst.graph, "d").unwrap(), Vec::<String>::new());
        assert!(matches!(bridge_neighbors(&part, &inst.graph, "zz"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn fig3_partition() {
        let inst = Instance::new(&presets::fig3()).unwrap();
        let part = StabPartition::from_instance(&inst);
        assert_eq!(named_bridges(&inst, &part), ["wa", "xb", "ya", "yb"]);
        assert_eq!(bridge_neighbors(&part, &inst.graph, "y").unwrap(), ["a", "b"]);
    }

    #[test]
    fn all_lower() {
        let rep = StabRepresentation::with_rects(vec![
            UnitRect::square("p", Rational::ZERO, Rational::ONE),
            UnitRect::square("q", r(1, 2), Rational::ZERO),
        ]);
        let part = partition(&rep).unwrap();
        assert!(part.upper.is_empty());
        assert!(part.bridge_edges.is_empty());
    }

    #[test]
    fn bridge_triangles() {
        let inst = Instance::new(&presets::fig2()).unwrap();
        let part = StabPartition::from_instance(&inst);
        assert!(find_bridge_triangles(&inst.graph, &part).is_empty());

        // lower u, u' adjacent, both bridged to upper w
        let rep = StabRepresentation::with_rects(vec![
            UnitRect::square("u", Rational::ZERO, Rational::ONE),
            UnitRect::square("u'", r(1, 2), Rational::ONE),
            UnitRect::square("w", r(1, 4), r(3, 2)),
        ]);
        let inst = Instance::new(&rep).unwrap();
        let part = StabPartition::from_instance(&inst);
        assert_eq!(find_bridge_triangles(&inst.graph, &part), vec![[0, 1, 2]]);

        let inst = Instance::new(&presets::fig1()).unwrap();
        let part = StabPartition::from_instance(&inst);
        assert!(find_bridge_triangles(&inst.graph, &part).is_empty());
    }
}
