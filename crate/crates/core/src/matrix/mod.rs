//! 0-1 matrices and the SNIR / PSA / ISSR characterization of 2SUIIG graphs.

mod build;
mod lemmas;
mod reconstruct;
mod text;

pub use build::{build_issr, is_strict_partition, upper_column_order};
pub use lemmas::{structural_lemma_violations, LemmaViolation};
pub use reconstruct::reconstruct_representation;
pub use text::{format_issr, parse_issr, read_issr, write_issr};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::graph::Graph;
use crate::interval::{is_snir, OrientedComplement};
use crate::{Error, Result};

/// Dense 0-1 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZeroOneMatrix { rows, cols, data: vec![false; rows * cols] }
    }

    /// Rectangular rows of 0/1 values; any other entry is an error.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = ZeroOneMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Parse { line: i + 1, msg: format!("expected {cols} entries, found {}", row.len()) });
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::Parse { line: i + 1, msg: format!("entry {x} is not 0/1") }),
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.cols).filter(|&j| self.get(i, j)).count()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    /// Column of the first 1 in row `i`.
    pub fn first(&self, i: usize) -> Option<usize> {
        (0..self.cols).find(|&j| self.get(i, j))
    }

    /// Column of the last 1 in row `i`.
    pub fn last(&self, i: usize) -> Option<usize> {
        (0..self.cols).rev().find(|&j| self.get(i, j))
    }

    pub fn row_consecutive(&self, i: usize) -> bool {
        match (self.first(i), self.last(i)) {
            (Some(f), Some(l)) => (f..=l).all(|j| self.get(i, j)),
            _ => true,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect()).collect()
    }

    pub fn transpose(&self) -> ZeroOneMatrix {
        let mut t = ZeroOneMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<&str> = (0..self.cols).map(|j| if self.get(i, j) { "1" } else { "0" }).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Which clause of a matrix definition failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixViolation {
    /// Stable identifier such as `psa(ii)` or `issr(iv)`.
    pub clause: &'static str,
    pub detail: String,
}

impl fmt::Display for MatrixViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause, self.detail)
    }
}

impl From<MatrixViolation> for Error {
    fn from(v: MatrixViolation) -> Error {
        Error::Matrix { clause: v.clause.to_string(), detail: v.detail }
    }
}

fn violation(clause: &'static str, detail: String) -> MatrixViolation {
    MatrixViolation { clause, detail }
}

/// Proper stab adjacency predicate.
///
/// Rows with no 1 have no `First` and take no part in clauses (ii)/(iii).
/// Clause (iii) equality `First(j) = First(i) + 1` is accepted only when row
/// `i` holds two 1s.
pub fn is_psa(m: &ZeroOneMatrix) -> Result<(), MatrixViolation> {
    for i in 0..m.rows() {
        if !m.row_consecutive(i) {
            return Err(violation("psa(i)", format!("row {i}: 1s are not consecutive")));
        }
        if m.row_sum(i) > 2 {
            return Err(violation("psa(i)", format!("row {i}: {} ones (at most 2)", m.row_sum(i))));
        }
    }
    for i in 0..m.rows() {
        let Some(fi) = m.first(i) else { continue };
        for j in 0..i {
            let Some(fj) = m.first(j) else { continue };
            match m.row_sum(j) {
                2 if fj > fi => {
                    return Err(violation(
                        "psa(ii)",
                        format!("rows {j} < {i}: First({j}) = {fj} > First({i}) = {fi}"),
                    ))
                }
                1 if fj > fi + 1 => {
                    return Err(violation(
                        "psa(iii)",
                        format!("rows {j} < {i}: First({j}) = {fj} > First({i}) + 1 = {}", fi + 1),
                    ))
                }
                1 if fj == fi + 1 && m.row_sum(i) != 2 => {
                    return Err(violation(
                        "psa(iii)",
                        format!("rows {j} < {i}: First({j}) = First({i}) + 1 but row {i} has one 1"),
                    ))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Block matrix `[[A', A''], [A''ᵗ, 0]]` with `A'` the `m×m` lower block and
/// `A''` the `m×n` bridge block. `labels` names rows then columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IssrMatrix {
    pub m: usize,
    pub n: usize,
    pub a_prime: ZeroOneMatrix,
    pub a_dprime: ZeroOneMatrix,
    pub labels: Vec<String>,
}

impl IssrMatrix {
    pub fn new(a_prime: ZeroOneMatrix, a_dprime: ZeroOneMatrix, labels: Option<Vec<String>>) -> Result<Self> {
        let m = a_prime.rows();
        if a_prime.cols() != m || a_dprime.rows() != m {
            return Err(malformed(format!(
                "block shapes {}x{} and {}x{} do not fit",
                a_prime.rows(),
                a_prime.cols(),
                a_dprime.rows(),
                a_dprime.cols()
            )));
        }
        let n = a_dprime.cols();
        let labels = match labels {
            Some(l) if l.len() == m + n => l,
            Some(l) => return Err(malformed(format!("{} labels for {} vertices", l.len(), m + n))),
            None => (0..m).map(|i| format!("r{i}")).chain((0..n).map(|k| format!("c{k}"))).collect(),
        };
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(malformed("duplicate labels".into()));
        }
        if !a_prime.is_symmetric() || (0..m).any(|i| !a_prime.get(i, i)) {
            return Err(malformed("lower block must be symmetric with unit diagonal".into()));
        }
        Ok(IssrMatrix { m, n, a_prime, a_dprime, labels })
    }

    /// Splits a full symmetric `(m+n)×(m+n)` matrix.
    pub fn from_full(full: &ZeroOneMatrix, m: usize, n: usize, labels: Option<Vec<String>>) -> Result<Self> {
        if full.rows() != m + n || full.cols() != m + n {
            return Err(malformed(format!("matrix is {}x{}, header says m+n = {}", full.rows(), full.cols(), m + n)));
        }
        if !full.is_symmetric() {
            return Err(malformed("matrix is not symmetric".into()));
        }
        for a in m..m + n {
            for b in m..m + n {
                if full.get(a, b) {
                    return Err(malformed(format!("entry ({a},{b}) of the upper block is nonzero")));
                }
            }
        }
        let mut ap = ZeroOneMatrix::zeros(m, m);
        let mut ad = ZeroOneMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..m {
                ap.set(i, j, full.get(i, j));
            }
            for k in 0..n {
                ad.set(i, k, full.get(i, m + k));
            }
        }
        IssrMatrix::new(ap, ad, labels)
    }

    pub fn assemble(&self) -> ZeroOneMatrix {
        let t = self.m + self.n;
        let mut full = ZeroOneMatrix::zeros(t, t);
        for i in 0..self.m {
            for j in 0..self.m {
                full.set(i, j, self.a_prime.get(i, j));
            }
            for k in 0..self.n {
                let x = self.a_dprime.get(i, k);
                full.set(i, self.m + k, x);
                full.set(self.m + k, i, x);
            }
        }
        full
    }

    /// Graph of the assembled matrix (off-diagonal entries), vertices in
    /// row-then-column order.
    pub fn graph(&self) -> Graph {
        let full = self.assemble();
        let mut g = Graph::new(self.labels.iter().cloned()).expect("labels distinct");
        for a in 0..full.rows() {
            for b in a + 1..full.cols() {
                if full.get(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Unit interval graph `I` of the lower block, on row indices.
    pub fn lower_graph(&self) -> Graph {
        let mut g = Graph::new(self.labels[..self.m].iter().cloned()).expect("labels distinct");
        for i in 0..self.m {
            for j in i + 1..self.m {
                if self.a_prime.get(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Orientation of the complement of `I` read off the row order.
    pub fn lower_orientation(&self) -> OrientedComplement {
        let mut arcs = BTreeSet::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                if !self.a_prime.get(i, j) {
                    arcs.insert((i, j));
                }
            }
        }
        OrientedComplement { vertices: (0..self.m).collect(), arcs }
    }
}

fn malformed(detail: String) -> Error {
    Error::Matrix { clause: "blocks".into(), detail }
}

/// Edge count of a shortest path between every pair of rows of `I`.
fn row_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for w in g.neighbors(v) {
                    if d[w].is_none() {
                        d[w] = Some(d[v].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Independence stair stab representation predicate.
///
/// Clause (iii) forbids two rows sharing a column from being joined by a
/// directed path of two or more arcs in the complement orientation. Such a
/// path exists in the row-order orientation iff it exists in its reversal
/// (with the endpoints swapped), so the verdict does not depend on which of
/// the two orientations is used. Clause (iv) takes `p` as the edge count of
/// a shortest path in `I` and is vacuous for rows in different components.
pub fn is_issr(mat: &IssrMatrix) -> Result<(), MatrixViolation> {
    if !is_snir(&mat.a_prime) {
        return Err(violation("issr(i)", "lower block is not SNIR".into()));
    }
    is_psa(&mat.a_dprime).map_err(|v| violation("issr(ii)", v.to_string()))?;

    let orient = mat.lower_orientation();
    for k in 0..mat.n {
        let rows: Vec<usize> = (0..mat.m).filter(|&i| mat.a_dprime.get(i, k)).collect();
        for (x, &j) in rows.iter().enumerate() {
            for &i in &rows[x + 1..] {
                let forward = orient.longest_path(j, i).unwrap_or(0);
                if forward >= 2 {
                    return Err(violation(
                        "issr(iii)",
                        format!(
                            "column {k}: rows {j} and {i} are joined by a complement path of length {forward}"
                        ),
                    ));
                }
            }
        }
    }

    let dist = row_distances(&mat.lower_graph());
    let ones: Vec<(usize, usize)> = (0..mat.m)
        .flat_map(|i| (0..mat.n).filter(move |&k| mat.a_dprime.get(i, k)).map(move |k| (i, k)))
        .collect();
    for &(i, k) in &ones {
        for &(j, l) in &ones {
            if k > l {
                continue;
            }
            if let Some(p) = dist[i][j] {
                if l - k > p + 1 {
                    return Err(violation(
                        "issr(iv)",
                        format!("entries ({i},{k}) and ({j},{l}): l-k = {} > p+1 = {}", l - k, p + 1),
                    ));
                }
            }
        }
    }
    Ok(())
}
