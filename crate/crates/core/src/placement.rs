//! Systems of difference constraints `x[b] - x[a] <= w` over exact rationals,
//! solved by Bellman-Ford from a virtual source.

use crate::rational::Rational;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Constraint {
    pub a: usize,
    pub b: usize,
    pub w: Rational,
    /// Caller-side tag; constraints with a tag may be dropped by
    /// [`solve_dropping`].
    pub tag: Option<usize>,
}

#[derive(Default)]
pub(crate) struct System {
    pub vars: usize,
    pub cons: Vec<Constraint>,
}

impl System {
    pub fn new(vars: usize) -> Self {
        System { vars, cons: Vec::new() }
    }

    /// `x[b] - x[a] <= w`
    pub fn le(&mut self, b: usize, a: usize, w: Rational) {
        self.cons.push(Constraint { a, b, w, tag: None });
    }

    /// `x[b] - x[a] >= w`
    pub fn ge(&mut self, b: usize, a: usize, w: Rational) {
        self.le(a, b, -w);
    }

    pub fn soft_le(&mut self, b: usize, a: usize, w: Rational, tag: usize) {
        self.cons.push(Constraint { a, b, w, tag: Some(tag) });
    }

    pub fn soft_ge(&mut self, b: usize, a: usize, w: Rational, tag: usize) {
        self.soft_le(a, b, -w, tag);
    }

    /// A solution, or the indices into `cons` of a negative cycle.
    pub fn solve(&self, active: &[bool]) -> Result<Vec<Rational>, Vec<usize>> {
        let n = self.vars;
        let mut dist = vec![Rational::ZERO; n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut last_changed = None;
        for _ in 0..=n {
            last_changed = None;
            for (ci, c) in self.cons.iter().enumerate() {
                if !active[ci] {
                    continue;
                }
                let cand = dist[c.a] + c.w;
                if cand < dist[c.b] {
                    dist[c.b] = cand;
                    pred[c.b] = Some(ci);
                    last_changed = Some(c.b);
                }
            }
            if last_changed.is_none() {
                return Ok(dist);
            }
        }
        // Walk back n steps to land on the cycle, then collect it.
        let mut v = last_changed.expect("relaxation in final round");
        for _ in 0..n {
            v = self.cons[pred[v].expect("predecessor")].a;
        }
        let start = v;
        let mut cycle = Vec::new();
        loop {
            let ci = pred[v].expect("predecessor");
            cycle.push(ci);
            v = self.cons[ci].a;
            if v == start {
                break;
            }
        }
        Err(cycle)
    }

    /// Solves, dropping tagged constraints that lie on negative cycles until
    /// feasible. Returns the solution and which tags were dropped, or `None`
    /// if a cycle consists of untagged constraints only.
    pub fn solve_dropping(&self) -> Option<(Vec<Rational>, Vec<usize>)> {
        let mut active = vec![true; self.cons.len()];
        let mut dropped = Vec::new();
        loop {
            match self.solve(&active) {
                Ok(x) => return Some((x, dropped)),
                Err(cycle) => {
                    let soft = cycle.iter().copied().find(|&ci| self.cons[ci].tag.is_some())?;
                    let tag = self.cons[soft].tag.unwrap();
                    for (ci, c) in self.cons.iter().enumerate() {
                        if c.tag == Some(tag) {
                            active[ci] = false;
                        }
                    }
                    dropped.push(tag);
                }
            }
        }
    }
}

/// Left endpoints of unit intervals realizing a proper interval ordering.
///
/// `last[i]` is the position of the rightmost vertex adjacent to position
/// `i` (at least `i`, non-decreasing). Intervals `[s, s+1]` are closed;
/// non-neighbors are kept more than `1` apart.
pub(crate) fn unit_positions(last: &[usize]) -> Option<Vec<Rational>> {
    let k = last.len();
    for halvings in 0..8 {
        let delta = Rational::new(1, (k as i64 + 1) << halvings);
        let mut sys = System::new(k);
        for (i, &l) in last.iter().enumerate() {
            if i + 1 < k {
                sys.ge(i + 1, i, Rational::ZERO);
            }
            sys.le(l, i, Rational::ONE);
            if l + 1 < k {
                sys.ge(l + 1, i, Rational::ONE + delta);
            }
        }
        if let Ok(x) = sys.solve(&vec![true; sys.cons.len()]) {
            let base = x.first().copied().unwrap_or(Rational::ZERO);
            return Some(x.into_iter().map(|v| v - base).collect());
        }
    }
    None
}
