//! Geometric consequences of a 2SUIIG representation that the matrix
//! characterization relies on. Each check reports the first offending
//! vertices by name.

use std::collections::{BTreeSet, VecDeque};

use crate::partition::StabPartition;
use crate::rational::Rational;
use crate::rep::Instance;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaViolation {
    pub lemma: &'static str,
    pub detail: String,
}

/// All checks; empty when every inequality holds.
pub fn structural_lemma_violations(inst: &Instance) -> Result<Vec<LemmaViolation>> {
    inst.require_2suig()?;
    inst.require_2siig()?;
    let part = StabPartition::from_instance(inst);
    let s = |v: usize| inst.rect(v).x_left;
    let name = |v: usize| inst.name(v).to_string();
    let mut out = Vec::new();
    let nb: Vec<Vec<usize>> = (0..inst.n())
        .map(|v| {
            let mut w = part.bridge_neighbors_of(v);
            inst.sort_left(&mut w);
            w
        })
        .collect();

    for &v in &part.lower {
        if nb[v].len() > 2 {
            out.push(LemmaViolation { lemma: "bridge-degree", detail: format!("{} has {} bridge neighbors", name(v), nb[v].len()) });
        }
        if let [x, z] = nb[v][..] {
            if let Some(&y) = part.upper.iter().find(|&&y| s(x) < s(y) && s(y) < s(z)) {
                out.push(LemmaViolation {
                    lemma: "bridge-degree",
                    detail: format!("{} lies between the bridge neighbors {} and {} of {}", name(y), name(x), name(z), name(v)),
                });
            }
        }
    }

    let lower_graph = inst.graph.induced(&part.lower);
    for (i, &u) in part.lower.iter().enumerate() {
        let paths = bfs_paths(&lower_graph, i);
        for (j, &v) in part.lower.iter().enumerate() {
            if j <= i {
                continue;
            }
            let Some(path) = paths[j].as_ref() else { continue };
            // p counts the vertices u_1..u_p of the path.
            let p = path.len();
            let union: BTreeSet<usize> = path.iter().flat_map(|&k| nb[part.lower[k]].iter().copied()).collect();
            if union.len() > p + 1 {
                out.push(LemmaViolation {
                    lemma: "path-union",
                    detail: format!(
                        "shortest {}-{} path on {p} vertices has {} bridge neighbors",
                        name(u),
                        name(v),
                        union.len()
                    ),
                });
            }
        }
    }

    for &u in &part.lower {
        for &v in &part.lower {
            if s(u) >= s(v) {
                continue;
            }
            if nb[u].len() == 2 {
                if let Some(&x) = nb[v].iter().find(|&&x| s(x) < s(nb[u][0])) {
                    out.push(LemmaViolation {
                        lemma: "two-neighbor-order",
                        detail: format!("{} in N_B({}) precedes both bridge neighbors of {}", name(x), name(v), name(u)),
                    });
                }
            }
            if nb[u].len() == 1 {
                let b = nb[u][0];
                if let Some(&a) = nb[v].iter().find(|&&a| s(b) - Rational::int(2) >= s(a)) {
                    out.push(LemmaViolation {
                        lemma: "one-neighbor-order",
                        detail: format!("s_{} - 2 >= s_{} for {} < {}", name(b), name(a), name(u), name(v)),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Shortest path (as local indices) from `s` to every vertex, by BFS.
fn bfs_paths(g: &crate::Graph, s: usize) -> Vec<Option<Vec<usize>>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for y in g.neighbors(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    (0..g.n())
        .map(|t| {
            (prev[t] != usize::MAX).then(|| {
                let mut path = vec![t];
                let mut c = t;
                while c != s {
                    c = prev[c];
                    path.push(c);
                }
                path.reverse();
                path
            })
        })
        .collect()
}
