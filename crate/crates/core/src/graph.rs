//! Vertex-labeled simple undirected graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::{Error, Result};

/// Simple undirected graph over named vertices.
///
/// Vertices are addressed by dense indices `0..n` in declaration order;
/// names are kept for I/O and canonical output.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<bool>>,
}

impl PartialEq for Graph {
    /// Equal as labeled graphs: same vertex names and the same named edges,
    /// regardless of declaration order.
    fn eq(&self, other: &Self) -> bool {
        let a: BTreeSet<&str> = self.names.iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = other.names.iter().map(String::as_str).collect();
        a == b && self.named_edges() == other.named_edges()
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut g = Graph::default();
        for name in names {
            g.add_vertex(name)?;
        }
        Ok(g)
    }

    pub fn from_edges<S: AsRef<str>>(
        names: &[S],
        edges: &[(S, S)],
    ) -> Result<Self> {
        let mut g = Graph::new(names.iter().map(|s| s.as_ref().to_string()))?;
        for (u, v) in edges {
            g.add_named_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Adds a vertex, returning its index. Duplicate names are rejected.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::Parse { line: 0, msg: format!("duplicate vertex {name:?}") });
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        for row in &mut self.adj {
            row.push(false);
        }
        self.adj.push(vec![false; i + 1]);
        Ok(i)
    }

    /// Panics on loops or out-of-range indices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn add_named_edge(&mut self, u: &str, v: &str) -> Result<()> {
        let a = self.index_of(u)?;
        let b = self.index_of(v)?;
        if a == b {
            return Err(Error::Parse { line: 0, msg: format!("loop at {u:?}") });
        }
        self.add_edge(a, b);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Edges by name, each pair ordered lexicographically.
    pub fn named_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.names[u].clone(), self.names[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.adj[a][b]))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.adj[a][b]))
    }

    /// A clique is maximal iff no outside vertex is adjacent to all of it.
    pub fn is_maximal_clique(&self, vs: &[usize]) -> bool {
        self.is_clique(vs)
            && (0..self.n()).all(|w| vs.contains(&w) || !vs.iter().all(|&a| self.adj[a][w]))
    }

    /// Induced subgraph on `vs`, in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::default();
        for &v in vs {
            g.add_vertex(self.names[v].clone()).expect("distinct vertices");
        }
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.adj[a][b] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// All triangles `[a, b, c]` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.adj[a][b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.adj[a][c] && self.adj[b][c] {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", self.names[u], self.names[v]);
        }
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                let _ = writeln!(s, "{}", self.names[v]);
            }
        }
        s
    }
}

/// Parses the edge-list format: one `u v` pair per line, `#` starts a
/// comment. A line holding a single token declares an isolated vertex.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: lineno + 1, msg };
        let ensure = |g: &mut Graph, t: &str| -> usize {
            match g.index.get(t) {
                Some(&i) => i,
                None => g.add_vertex(t).expect("fresh name"),
            }
        };
        match toks.as_slice() {
            [v] => {
                ensure(&mut g, v);
            }
            [u, v] => {
                if u == v {
                    return Err(err(format!("loop at {u:?}")));
                }
                let a = ensure(&mut g, u);
                let b = ensure(&mut g, v);
                g.add_edge(a, b);
            }
            _ => return Err(err(format!("expected `u v`, found {} tokens", toks.len()))),
        }
    }
    Ok(g)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_edge_list() {
        let g = parse_graph("# c5\na b\nb c # tail\nc d\nd e\ne a\n\nz\n").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(g.index_of("e").unwrap(), g.index_of("a").unwrap()));
        assert_eq!(g.degree(g.index_of("z").unwrap()), 0);
    }

    #[test]
    fn parse_errors_carry_line() {
        match parse_graph("a b\na b c\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph("a a\n").is_err());
    }

    #[test]
    fn multi_edges_collapse() {
        let g = parse_graph("a b\nb a\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn maximality() {
        let g = parse_graph("a b\nb c\na c\nc d\n").unwrap();
        let ix = |s| g.index_of(s).unwrap();
        assert!(g.is_maximal_clique(&[ix("a"), ix("b"), ix("c")]));
        assert!(!g.is_maximal_clique(&[ix("a"), ix("b")]));
        assert!(g.is_maximal_clique(&[ix("c"), ix("d")]));
        assert_eq!(g.triangles().len(), 1);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = parse_graph("a b\nb c\nq\n").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }
}
