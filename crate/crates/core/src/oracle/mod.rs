//! Brute-force references, class conversions and seeded generators.
//!
//! The references here work on the abstract [`Graph`] only and share no code
//! with the geometric algorithms they check.

mod convert;
mod generate;

pub use convert::{proper_to_unit, two_interval_representation, TwoIntervalRepresentation};
pub use generate::{generate, GenClass, GeneratorConfig};

use std::collections::BTreeSet;

use crate::cliques::CliqueList;
use crate::graph::Graph;
use crate::{Error, Result};

pub const CLIQUE_LIMIT: usize = 24;
pub const NAIVE_CLIQUE_LIMIT: usize = 16;
pub const CHROMATIC_LIMIT: usize = 14;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Bron–Kerbosch with Tomita pivoting over bitsets.
pub fn bruteforce_maximal_cliques(g: &Graph) -> Result<CliqueList> {
    guard(g, CLIQUE_LIMIT)?;
    let nb = masks(g);
    let mut out = Vec::new();
    fn bk(r: u64, mut p: u64, mut x: u64, nb: &[u64], out: &mut Vec<Vec<usize>>) {
        if p == 0 {
            if x == 0 {
                out.push(bits(r).collect());
            }
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (p & nb[u]).count_ones()).expect("p nonempty");
        for v in bits(p & !nb[pivot]) {
            bk(r | 1 << v, p & nb[v], x & nb[v], nb, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    if g.n() > 0 {
        let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        bk(0, all, 0, &nb, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Every vertex subset, kept when it is a clique no vertex extends.
pub fn naive_maximal_cliques(g: &Graph) -> Result<CliqueList> {
    guard(g, NAIVE_CLIQUE_LIMIT)?;
    let n = g.n();
    let nb = masks(g);
    let mut out = Vec::new();
    for s in 1u64..(1u64 << n) {
        let clique = bits(s).all(|v| (s & !(1 << v)) & !nb[v] == 0);
        if !clique {
            continue;
        }
        let extendable = (0..n).any(|w| s & (1 << w) == 0 && s & !nb[w] == 0);
        if !extendable {
            out.push(bits(s).collect());
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    out.sort();
    Ok(out)
}

/// Exact chromatic number: smallest `k` admitting a proper coloring,
/// searched by backtracking in decreasing-degree order.
pub fn bruteforce_chromatic(g: &Graph) -> Result<usize> {
    guard(g, CHROMATIC_LIMIT)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    fn go(i: usize, k: usize, order: &[usize], g: &Graph, col: &mut [Option<usize>]) -> bool {
        let Some(&v) = order.get(i) else { return true };
        // Symmetry: never open more than one new color at a time.
        let used = col.iter().flatten().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).all(|w| col[w] != Some(c)) {
                col[v] = Some(c);
                if go(i + 1, k, order, g, col) {
                    return true;
                }
                col[v] = None;
            }
        }
        false
    }
    for k in 1..=n {
        let mut col = vec![None; n];
        if go(0, k, &order, g, &mut col) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

/// Cliques as sets of names, for comparing across vertex numberings.
pub fn named_clique_set(g: &Graph, cliques: &[Vec<usize>]) -> BTreeSet<BTreeSet<String>> {
    cliques.iter().map(|c| c.iter().map(|&v| g.name(v).to_string()).collect()).collect()
}
