//! Machinery on the per-side interval graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::matrix::ZeroOneMatrix;
use crate::partition::StabPartition;
use crate::rep::{Instance, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Geometric,
    Recognized,
}

/// A permutation of some vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub origin: Origin,
}

/// Vertices of one side sorted by `x_left`, ties by id.
pub fn left_order(inst: &Instance, side: Side) -> VertexOrdering {
    let mut order = inst.side_vertices(side);
    inst.sort_left(&mut order);
    VertexOrdering { order, origin: Origin::Geometric }
}

/// Transitive orientation of the complement of one side's interval graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedComplement {
    pub vertices: Vec<usize>,
    pub arcs: BTreeSet<(usize, usize)>,
}

impl OrientedComplement {
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn reversed(&self) -> OrientedComplement {
        OrientedComplement {
            vertices: self.vertices.clone(),
            arcs: self.arcs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.arcs.iter().all(|&(a, b)| {
            self.arcs.range((b, 0)..(b + 1, 0)).all(|&(_, c)| self.has_arc(a, c))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.arcs.iter().all(|&(a, b)| a != b && !self.has_arc(b, a))
    }

    /// Arcs go only between non-adjacent vertices and cover every such pair once.
    pub fn orients_complement_of(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        self.arcs.iter().all(|&(a, b)| !g.has_edge(a, b))
            && vs.iter().enumerate().all(|(i, &a)| {
                vs[i + 1..].iter().all(|&b| g.has_edge(a, b) || self.has_arc(a, b) || self.has_arc(b, a))
            })
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.range((v, 0)..(v + 1, 0)).map(|&(_, w)| w)
    }

    /// Topological order of `vertices`; the orientation is assumed acyclic.
    fn topo_order(&self) -> Vec<usize> {
        let mut indeg: std::collections::BTreeMap<usize, usize> =
            self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(_, b) in &self.arcs {
            *indeg.get_mut(&b).expect("arc endpoint in vertex set") += 1;
        }
        let mut ready: Vec<usize> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
        let mut out = Vec::new();
        while let Some(v) = ready.pop() {
            out.push(v);
            for w in self.successors(v) {
                let d = indeg.get_mut(&w).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(w);
                }
            }
        }
        out
    }

    /// Length in arcs of a longest directed path from `u` to `v` (the `l_uv`
    /// quantity), or `None` when `v` is unreachable. `Some(0)` iff `u == v`.
    pub fn longest_path(&self, u: usize, v: usize) -> Option<usize> {
        let order = self.topo_order();
        let mut best: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        best.insert(u, 0);
        for &x in &order {
            let Some(&dx) = best.get(&x) else { continue };
            for y in self.successors(x) {
                let e = best.entry(y).or_insert(0);
                *e = (*e).max(dx + 1);
            }
        }
        best.get(&v).copied()
    }

    /// A longest path `[u ⇝ v]` itself.
    pub fn longest_path_vertices(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let len = self.longest_path(u, v)?;
        let mut path = vec![u];
        let mut cur = u;
        for remaining in (0..len).rev() {
            let next = self
                .successors(cur)
                .find(|&w| self.longest_path(w, v) == Some(remaining))?;
            path.push(next);
            cur = next;
        }
        Some(path)
    }
}

/// Arc `(u, v)` iff both on `side`, non-adjacent, and `u` lies entirely left of `v`.
pub fn complement_orientation(inst: &Instance, side: Side) -> OrientedComplement {
    let vertices = left_order(inst, side).order;
    let mut arcs = BTreeSet::new();
    for &u in &vertices {
        for &v in &vertices {
            if u != v && !inst.graph.has_edge(u, v) && inst.rect(u).x_right < inst.rect(v).x_left {
                arcs.insert((u, v));
            }
        }
    }
    OrientedComplement { vertices, arcs }
}

/// Checks that independent bridge pairs are oriented consistently on both
/// sides. Returns the first violating quadruple `[u1, v1, u2, v2]` (lower
/// endpoints `u`, upper endpoints `v`).
pub fn check_orientation_pairing(
    inst: &Instance,
    part: &StabPartition,
    lower: &OrientedComplement,
    upper: &OrientedComplement,
) -> Result<(), [usize; 4]> {
    let g = &inst.graph;
    for (i, &(u1, v1)) in part.bridge_edges.iter().enumerate() {
        for &(u2, v2) in &part.bridge_edges[i + 1..] {
            if u1 == u2 || v1 == v2 || g.has_edge(u1, u2) || g.has_edge(v1, v2) {
                continue;
            }
            let forward = lower.has_arc(u1, u2) && upper.has_arc(v1, v2);
            let backward = lower.has_arc(u2, u1) && upper.has_arc(v2, v1);
            if !forward && !backward {
                return Err([u1, v1, u2, v2]);
            }
        }
    }
    Ok(())
}

/// Augmented adjacency matrix (unit diagonal) in the given order.
pub fn snir_matrix(g: &Graph, order: &[usize]) -> ZeroOneMatrix {
    let k = order.len();
    let mut m = ZeroOneMatrix::zeros(k, k);
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            if i == j || g.has_edge(a, b) {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// Consecutive 1s per row, and `First`/`Last` non-decreasing down the rows.
/// Zero rows are allowed and skipped by the monotonicity test.
pub fn is_snir(m: &ZeroOneMatrix) -> bool {
    let mut prev: Option<(usize, usize)> = None;
    for i in 0..m.rows() {
        if !m.row_consecutive(i) {
            return false;
        }
        if let (Some(f), Some(l)) = (m.first(i), m.last(i)) {
            if let Some((pf, pl)) = prev {
                if f < pf || l < pl {
                    return false;
                }
            }
            prev = Some((f, l));
        }
    }
    true
}

/// Why no SNIR ordering was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refusal {
    /// Orderings tested: the final LexBFS sweep plus any exhaustive search.
    pub orderings_examined: usize,
    pub exhaustive: bool,
}

/// Largest vertex count for which a failed sweep is double-checked by
/// trying every permutation.
pub const EXHAUSTIVE_LIMIT: usize = 8;

/// Finds an ordering whose augmented adjacency matrix is SNIR (i.e. a unit
/// interval ordering), or refuses. Uses three LexBFS sweeps, the last two
/// with `+` tie-breaking; the result is verified with [`is_snir`].
pub fn recognize_proper_interval(g: &Graph) -> Result<VertexOrdering, Refusal> {
    let all: Vec<usize> = (0..g.n()).collect();
    let s1 = lexbfs(g, &all, None);
    let s2 = lexbfs(g, &all, Some(&s1));
    let s3 = lexbfs(g, &all, Some(&s2));
    if is_snir(&snir_matrix(g, &s3)) {
        return Ok(VertexOrdering { order: s3, origin: Origin::Recognized });
    }
    if g.n() > EXHAUSTIVE_LIMIT {
        return Err(Refusal { orderings_examined: 1, exhaustive: false });
    }
    let mut examined = 1;
    let mut perm = Vec::with_capacity(g.n());
    let mut used = vec![false; g.n()];
    if umbrella_search(g, &mut perm, &mut used, &mut examined) {
        return Ok(VertexOrdering { order: perm, origin: Origin::Recognized });
    }
    Err(Refusal { orderings_examined: examined, exhaustive: true })
}

/// Depth-first search over orderings. A SNIR ordering has the umbrella
/// property (`i < j < k` and `i ~ k` imply `i ~ j` and `j ~ k`), so prefixes
/// breaking it are cut; `examined` counts every complete ordering ruled out
/// or tested.
fn umbrella_search(g: &Graph, perm: &mut Vec<usize>, used: &mut [bool], examined: &mut usize) -> bool {
    let n = g.n();
    if perm.len() == n {
        *examined += 1;
        return is_snir(&snir_matrix(g, perm));
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        let ok = perm.iter().enumerate().all(|(i, &a)| {
            !g.has_edge(a, v) || perm[i + 1..].iter().all(|&b| g.has_edge(a, b) && g.has_edge(b, v))
        });
        if !ok {
            *examined += (1..=n - perm.len() - 1).product::<usize>();
            continue;
        }
        used[v] = true;
        perm.push(v);
        if umbrella_search(g, perm, used, examined) {
            return true;
        }
        perm.pop();
        used[v] = false;
    }
    false
}

/// Lexicographic BFS over `vs`. With `prev`, ties go to the vertex appearing
/// last in `prev` (LexBFS+); otherwise to the first in `vs`.
pub fn lexbfs(g: &Graph, vs: &[usize], prev: Option<&[usize]>) -> Vec<usize> {
    let n = vs.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let rank: Vec<usize> = match prev {
        Some(p) => vs.iter().map(|v| p.iter().position(|x| x == v).expect("same vertex set")).collect(),
        None => (0..n).map(|i| n - i).collect(),
    };
    let mut out = Vec::with_capacity(n);
    for step in 0..n {
        let pick = (0..n)
            .filter(|&i| !visited[i])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(rank[a].cmp(&rank[b])))
            .expect("unvisited vertex remains");
        visited[pick] = true;
        out.push(vs[pick]);
        for i in 0..n {
            if !visited[i] && g.has_edge(vs[pick], vs[i]) {
                labels[i].push(n - step);
            }
        }
    }
    out
}

/// Maximal cliques of the interval graph on `vs`, all assumed on one side
/// (so adjacency is x-overlap). Left-to-right sweep; each clique sorted.
pub fn sweep_cliques(inst: &Instance, vs: &[usize]) -> Vec<Vec<usize>> {
    // (x, 0 = start / 1 = end, vertex): starts precede ends at equal x.
    let mut events: Vec<_> = vs
        .iter()
        .flat_map(|&v| [(inst.rect(v).x_left, 0u8, v), (inst.rect(v).x_right, 1u8, v)])
        .collect();
    events.sort();
    let mut active: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    let mut grew = false;
    for (_, kind, v) in events {
        if kind == 0 {
            active.insert(v);
            grew = true;
        } else {
            if grew {
                out.push(active.iter().copied().collect());
                grew = false;
            }
            active.remove(&v);
        }
    }
    out
}

pub fn interval_maximal_cliques(inst: &Instance, side: Side) -> Vec<Vec<usize>> {
    sweep_cliques(inst, &inst.side_vertices(side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::{r, Rational};
    use crate::rep::{StabRepresentation, UnitRect};

    fn inst(rep: StabRepresentation) -> Instance {
        Instance::new(&rep).unwrap()
    }

    fn names(inst: &Instance, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| inst.name(v).to_string()).collect()
    }

    #[test]
    fn left_order_fig1() {
        let i = inst(presets::fig1());
        assert_eq!(names(&i, &left_order(&i, Side::Lower).order), ["a", "b"]);
    }

    #[test]
    fn left_order_ties_by_id() {
        let i = inst(StabRepresentation::with_rects(vec![
            UnitRect::square("q", Rational::ZERO, Rational::ONE),
            UnitRect::square("p", Rational::ZERO, Rational::ONE),
        ]));
        assert_eq!(names(&i, &left_order(&i, Side::Lower).order), ["p", "q"]);
    }

    #[test]
    fn orientation_disjoint_chain() {
        let i = inst(StabRepresentation::with_rects(vec![
            UnitRect::square("u", Rational::ZERO, Rational::ONE),
            UnitRect::square("v", Rational::int(2), Rational::ONE),
            UnitRect::square("w", Rational::int(4), Rational::ONE),
        ]));
        let o = complement_orientation(&i, Side::Lower);
        assert_eq!(o.arcs, BTreeSet::from([(0, 1), (1, 2), (0, 2)]));
        assert!(o.is_transitive() && o.is_antisymmetric());
        assert!(o.orients_complement_of(&i.graph));
        assert_eq!(o.longest_path(0, 2), Some(2));
        assert_eq!(o.longest_path_vertices(0, 2), Some(vec![0, 1, 2]));
        assert_eq!(o.longest_path(2, 0), None);
    }

    #[test]
    fn orientation_clique_and_fig2() {
        let i = inst(presets::complete_split(4, 0));
        assert!(complement_orientation(&i, Side::Lower).arcs.is_empty());

        let i = inst(presets::fig2());
        let up = complement_orientation(&i, Side::Upper);
        let w: Vec<usize> = ["w1", "w2", "w3", "w4"].iter().map(|s| i.graph.index_of(s).unwrap()).collect();
        let expected: BTreeSet<_> =
            (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).map(|(a, b)| (w[a], w[b])).collect();
        assert_eq!(up.arcs, expected);
    }

    #[test]
    fn pairing_fig2_and_trivial() {
        for rep in [presets::fig2(), presets::k2_bridge(), presets::fig1()] {
            let i = inst(rep);
            let part = StabPartition::from_instance(&i);
            let lo = complement_orientation(&i, Side::Lower);
            let up = complement_orientation(&i, Side::Upper);
            assert_eq!(check_orientation_pairing(&i, &part, &lo, &up), Ok(()));
        }
    }

    #[test]
    fn pairing_detects_crossed_orientation() {
        let i = inst(presets::fig2());
        let part = StabPartition::from_instance(&i);
        let lo = complement_orientation(&i, Side::Lower);
        let up = complement_orientation(&i, Side::Upper).reversed();
        assert!(check_orientation_pairing(&i, &part, &lo, &up).is_err());
    }

    #[test]
    fn snir_path() {
        let g = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let m = snir_matrix(&g, &[0, 1, 2]);
        assert_eq!(m.to_rows(), vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]]);
        assert!(is_snir(&m));
        assert!(is_snir(&ZeroOneMatrix::from_rows(&[vec![1]]).unwrap()));
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn all_orderings_fail(g: &Graph) -> bool {
        let mut p: Vec<usize> = (0..g.n()).collect();
        loop {
            if is_snir(&snir_matrix(g, &p)) {
                return false;
            }
            if !next_permutation(&mut p) {
                return true;
            }
        }
    }

    #[test]
    fn claw_has_no_snir_ordering() {
        let g = Graph::from_edges(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")]).unwrap();
        assert!(all_orderings_fail(&g));
        assert!(recognize_proper_interval(&g).is_err());
    }

    #[test]
    fn recognition_examples() {
        let p4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let o = recognize_proper_interval(&p4).unwrap();
        assert!(is_snir(&snir_matrix(&p4, &o.order)));

        let c5 = Graph::from_edges(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        )
        .unwrap();
        assert!(all_orderings_fail(&c5));
        let refusal = recognize_proper_interval(&c5).unwrap_err();
        assert!(refusal.exhaustive);
        assert_eq!(refusal.orderings_examined, 121);

        let k3 = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(recognize_proper_interval(&k3).is_ok());
    }

    #[test]
    fn sweep_cliques_examples() {
        let i = inst(presets::fig1());
        let cl: Vec<Vec<String>> =
            interval_maximal_cliques(&i, Side::Lower).iter().map(|c| names(&i, c)).collect();
        assert_eq!(cl, vec![vec!["a", "b"]]);

        let i = inst(presets::bridge_free(0, 3));
        assert_eq!(interval_maximal_cliques(&i, Side::Upper).len(), 2);

        let i = inst(presets::fig2());
        let cl: Vec<Vec<String>> =
            interval_maximal_cliques(&i, Side::Lower).iter().map(|c| names(&i, c)).collect();
        assert_eq!(cl, vec![vec!["u1", "u2"], vec!["u2", "u3"], vec!["u3", "u4", "u5"], vec!["u5", "u6"]]);
    }

    #[test]
    fn touching_intervals_share_a_clique() {
        let i = inst(StabRepresentation::with_rects(vec![
            UnitRect::square("a", Rational::ZERO, Rational::ONE),
            UnitRect::square("b", Rational::ONE, Rational::ONE),
            UnitRect::square("c", r(5, 2), Rational::ONE),
        ]));
        assert_eq!(interval_maximal_cliques(&i, Side::Lower), vec![vec![0, 1], vec![2]]);
    }
}
