use std::collections::BTreeSet;

use super::IssrMatrix;
use crate::interval::{left_order, recognize_proper_interval, snir_matrix};
use crate::matrix::ZeroOneMatrix;
use crate::partition::StabPartition;
use crate::rep::{Instance, Side, StabRepresentation};
use crate::{Error, Result};

fn require_2suiig(inst: &Instance) -> Result<()> {
    inst.require_2suig()?;
    inst.require_2siig()
}

/// Every upper vertex, added to the lower side, breaks unit-intervality.
/// Vacuously true when the upper side is empty.
pub fn is_strict_partition(rep: &StabRepresentation) -> Result<bool> {
    let inst = Instance::new(rep)?;
    require_2suiig(&inst)?;
    Ok(first_absorbable(&inst).is_none())
}

fn first_absorbable(inst: &Instance) -> Option<usize> {
    let lower = inst.side_vertices(Side::Lower);
    inst.side_vertices(Side::Upper).into_iter().find(|&v| {
        let mut vs = lower.clone();
        vs.push(v);
        recognize_proper_interval(&inst.graph.induced(&vs)).is_ok()
    })
}

fn closed_lower_nbhd(inst: &Instance, v: usize) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> =
        inst.graph.neighbors(v).filter(|&w| inst.sides[w] == Side::Lower).collect();
    s.insert(v);
    s
}

/// Orders the upper vertices so that, for non-twin lower `u` left of `v`,
/// every `u' ∈ N_B(u) \ N_B(v)` precedes every `v' ∈ N_B(v)`. Unconstrained
/// pairs follow `x_left`, then id.
pub fn upper_column_order(inst: &Instance, part: &StabPartition) -> Result<Vec<usize>> {
    let mut upper = part.upper.clone();
    inst.sort_left(&mut upper);
    let pos = |v: usize| upper.iter().position(|&x| x == v).expect("upper vertex");
    let k = upper.len();
    let mut before = vec![BTreeSet::new(); k]; // before[b] = columns that must precede b

    let lower = left_order(inst, Side::Lower).order;
    for &u in &lower {
        for &v in &lower {
            if inst.rect(u).x_left >= inst.rect(v).x_left {
                continue;
            }
            if closed_lower_nbhd(inst, u) == closed_lower_nbhd(inst, v) {
                continue;
            }
            let nbu = part.bridge_neighbors_of(u);
            let nbv = part.bridge_neighbors_of(v);
            for &a in nbu.iter().filter(|a| !nbv.contains(a)) {
                for &b in &nbv {
                    if a != b {
                        before[pos(b)].insert(pos(a));
                    }
                }
            }
        }
    }

    let mut placed = vec![false; k];
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k).find(|&c| !placed[c] && before[c].iter().all(|&p| placed[p]));
        match next {
            Some(c) => {
                placed[c] = true;
                out.push(upper[c]);
            }
            None => {
                let stuck = (0..k).filter(|&c| !placed[c]).map(|c| inst.name(upper[c]).to_string()).collect();
                return Err(Error::ColumnOrderCycle(stuck));
            }
        }
    }
    Ok(out)
}

/// ISSR matrix of a strict-partition 2SUIIG representation: rows in
/// geometric left order of the lower side, columns by [`upper_column_order`].
pub fn build_issr(rep: &StabRepresentation) -> Result<IssrMatrix> {
    let inst = Instance::new(rep)?;
    require_2suiig(&inst)?;
    if let Some(v) = first_absorbable(&inst) {
        return Err(Error::NotStrict(inst.name(v).to_string()));
    }
    let part = StabPartition::from_instance(&inst);
    let rows = left_order(&inst, Side::Lower).order;
    let cols = upper_column_order(&inst, &part)?;
    let a_prime = snir_matrix(&inst.graph, &rows);
    let mut a_dprime = ZeroOneMatrix::zeros(rows.len(), cols.len());
    for (i, &u) in rows.iter().enumerate() {
        for (k, &w) in cols.iter().enumerate() {
            a_dprime.set(i, k, inst.graph.has_edge(u, w));
        }
    }
    let labels = rows.iter().chain(&cols).map(|&v| inst.name(v).to_string()).collect();
    IssrMatrix::new(a_prime, a_dprime, Some(labels))
}
