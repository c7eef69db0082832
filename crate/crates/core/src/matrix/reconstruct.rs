use super::{is_issr, IssrMatrix};
use crate::placement::System;
use crate::rational::{r, Rational};
use crate::rep::{intersection_graph, StabRepresentation, UnitRect};
use crate::{Error, Result};

/// Unit-square 2-stab representation (ε = 1/2) whose intersection graph is
/// the graph of `mat`, with ids taken from the labels.
///
/// Left endpoints come from a difference-constraint system: the lower rows
/// realize the SNIR order, columns are pairwise disjoint and left to right
/// (in matrix order, or else sorted by the first and last rows they meet),
/// and bridged pairs overlap in x. Non-bridged row/column pairs are kept
/// apart in x where possible; the remaining overlaps are resolved by a second
/// system on the y levels.
pub fn reconstruct_representation(mat: &IssrMatrix) -> Result<StabRepresentation> {
    is_issr(mat)?;
    let (m, n) = (mat.m, mat.n);
    // Columns left to right in matrix order; failing that, by the rows
    // they meet.
    let given: Vec<usize> = (0..n).collect();
    let mut by_rows = given.clone();
    let span = |k: usize| {
        let rows: Vec<usize> = (0..m).filter(|&i| mat.a_dprime.get(i, k)).collect();
        (rows.first().copied(), rows.last().copied(), k)
    };
    by_rows.sort_by_key(|&k| span(k));
    let mut orders = vec![given];
    if by_rows != orders[0] {
        orders.push(by_rows);
    }
    let mut last_err = None;
    for order in &orders {
        for halvings in 0..8 {
            let delta = Rational::new(1, ((m + n) as i64 + 2) << halvings);
            match attempt(mat, order, delta) {
                Ok(rep) => return Ok(rep),
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.unwrap_or(Error::Placement { column: 0, reason: "no attempt made".into() }))
}

/// `order` lists the columns from left to right.
fn attempt(mat: &IssrMatrix, order: &[usize], delta: Rational) -> Result<StabRepresentation> {
    let (m, n) = (mat.m, mat.n);
    let one = Rational::ONE;
    let col = |k: usize| m + k;
    let mut pos = vec![0; n];
    for (p, &k) in order.iter().enumerate() {
        pos[k] = p;
    }

    let mut xs = System::new(m + n);
    for i in 0..m {
        if i + 1 < m {
            xs.ge(i + 1, i, Rational::ZERO);
        }
        let last = mat.a_prime.last(i).unwrap_or(i);
        xs.le(last, i, one);
        if last + 1 < m {
            xs.ge(last + 1, i, one + delta);
        }
    }
    for w in order.windows(2) {
        xs.ge(col(w[1]), col(w[0]), one + delta);
    }
    for i in 0..m {
        let first_pos = (0..n).filter(|&k| mat.a_dprime.get(i, k)).map(|k| pos[k]).min();
        for (k, &pk) in pos.iter().enumerate() {
            if mat.a_dprime.get(i, k) {
                xs.le(col(k), i, one);
                xs.le(i, col(k), one);
                continue;
            }
            let tag = i * n + k;
            if first_pos.is_some_and(|f| pk < f) {
                xs.soft_ge(i, col(k), one + delta, tag);
            } else {
                xs.soft_ge(col(k), i, one + delta, tag);
            }
        }
    }
    let (x, _dropped) = xs.solve_dropping().ok_or_else(|| Error::Placement {
        column: 0,
        reason: "x constraints are infeasible".into(),
    })?;

    // y: rows y_i in [0,1], columns tau_k in [0,1] (bottom at 3/2 + tau_k),
    // reference variable z last.
    let z = m + n;
    let mut ys = System::new(m + n + 1);
    for v in 0..m + n {
        ys.le(v, z, one);
        ys.ge(v, z, Rational::ZERO);
    }
    let half = r(1, 2);
    for i in 0..m {
        for k in 0..n {
            if mat.a_dprime.get(i, k) {
                ys.ge(i, col(k), half);
            } else if (x[col(k)] - x[i]).abs() <= one {
                ys.le(i, col(k), half - delta);
            }
        }
    }
    let y = ys.solve(&vec![true; ys.cons.len()]).map_err(|cycle| {
        let column = cycle
            .iter()
            .map(|&ci| ys.cons[ci])
            .flat_map(|c| [c.a, c.b])
            .find(|&v| v >= m && v < z)
            .map_or(0, |v| v - m);
        Error::Placement { column, reason: "y levels are infeasible".into() }
    })?;

    let base = x.first().copied().unwrap_or(Rational::ZERO);
    let mut rep = StabRepresentation::new();
    rep.flags.unit_squares = true;
    for v in 0..m + n {
        let yb = if v < m { y[v] - y[z] } else { r(3, 2) + y[v] - y[z] };
        rep.rects.push(UnitRect::square(mat.labels[v].clone(), x[v] - base, yb));
    }
    let got = intersection_graph(&rep)?;
    let want = mat.graph();
    if got != want {
        let column = (0..n)
            .find(|&k| (0..m + n).any(|v| v != col(k) && got.has_edge(v, col(k)) != want.has_edge(v, col(k))))
            .unwrap_or(0);
        return Err(Error::Placement { column, reason: "placement does not realize the matrix".into() });
    }
    Ok(rep)
}
