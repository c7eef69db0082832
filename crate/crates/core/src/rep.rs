//! Geometric 2-stab representations.
//!
//! Every rectangle has height exactly one and is stored by its x-extent and
//! bottom edge. The lower stab line is `y = 1`, the upper one `y = 2 + ε`.
//! Rectangles are closed: touching boundaries intersect.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::rational::{r, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Lower => Side::Upper,
            Side::Upper => Side::Lower,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRect {
    pub id: String,
    pub x_left: Rational,
    pub x_right: Rational,
    pub y_bottom: Rational,
    /// Only present when a file states the top edge explicitly; validation
    /// rejects anything other than `y_bottom + 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_top: Option<Rational>,
}

impl UnitRect {
    pub fn new(id: impl Into<String>, x_left: Rational, x_right: Rational, y_bottom: Rational) -> Self {
        UnitRect { id: id.into(), x_left, x_right, y_bottom, y_top: None }
    }

    /// Unit square with bottom-left corner `(s, y_bottom)`.
    pub fn square(id: impl Into<String>, s: Rational, y_bottom: Rational) -> Self {
        UnitRect::new(id, s, s + Rational::ONE, y_bottom)
    }

    pub fn top(&self) -> Rational {
        self.y_bottom + Rational::ONE
    }

    pub fn width(&self) -> Rational {
        self.x_right - self.x_left
    }

    pub fn x_overlaps(&self, other: &UnitRect) -> bool {
        self.x_left <= other.x_right && other.x_left <= self.x_right
    }

    pub fn y_overlaps(&self, other: &UnitRect) -> bool {
        self.y_bottom <= other.top() && other.y_bottom <= self.top()
    }

    pub fn intersects(&self, other: &UnitRect) -> bool {
        self.x_overlaps(other) && self.y_overlaps(other)
    }

    /// x-projection strictly contains the other's.
    pub fn properly_contains_x(&self, other: &UnitRect) -> bool {
        self.x_left <= other.x_left
            && other.x_right <= self.x_right
            && (self.x_left != other.x_left || self.x_right != other.x_right)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    #[serde(default)]
    pub unit_squares: bool,
    #[serde(default)]
    pub proper: bool,
}

impl ClassFlags {
    fn is_default(&self) -> bool {
        *self == ClassFlags::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabRepresentation {
    pub epsilon: Rational,
    pub rects: Vec<UnitRect>,
    #[serde(default, skip_serializing_if = "ClassFlags::is_default")]
    pub flags: ClassFlags,
}

/// One broken invariant of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EpsilonOutOfRange(Rational),
    DuplicateId(String),
    EmptyWidth(String),
    WrongHeight(String),
    CrossesNoStabLine(String),
    CrossesBothStabLines(String),
    NotUnitSquare(String),
    ProperContainment { outer: String, inner: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EpsilonOutOfRange(e) => write!(f, "epsilon {e} not in (0,1)"),
            Violation::DuplicateId(id) => write!(f, "duplicate id {id:?}"),
            Violation::EmptyWidth(id) => write!(f, "{id:?}: x_left must be < x_right"),
            Violation::WrongHeight(id) => write!(f, "{id:?}: height is not 1"),
            Violation::CrossesNoStabLine(id) => write!(f, "{id:?}: crosses no stab line"),
            Violation::CrossesBothStabLines(id) => write!(f, "{id:?}: crosses both stab lines"),
            Violation::NotUnitSquare(id) => {
                write!(f, "{id:?}: flag mismatch, unit_squares declared but width is not 1")
            }
            Violation::ProperContainment { outer, inner } => write!(
                f,
                "flag mismatch, proper declared but {outer:?} properly contains {inner:?}"
            ),
        }
    }
}

impl StabRepresentation {
    /// Empty representation with the canonical ε = 1/2.
    pub fn new() -> Self {
        StabRepresentation { epsilon: r(1, 2), rects: Vec::new(), flags: ClassFlags::default() }
    }

    pub fn with_rects(rects: Vec<UnitRect>) -> Self {
        StabRepresentation { rects, ..StabRepresentation::new() }
    }

    pub fn lower_line(&self) -> Rational {
        Rational::ONE
    }

    pub fn upper_line(&self) -> Rational {
        Rational::int(2) + self.epsilon
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    /// Side of a rectangle, if it crosses exactly one stab line.
    pub fn side_of(&self, rect: &UnitRect) -> Option<Side> {
        let crosses = |line: Rational| rect.y_bottom <= line && line <= rect.top();
        match (crosses(self.lower_line()), crosses(self.upper_line())) {
            (true, false) => Some(Side::Lower),
            (false, true) => Some(Side::Upper),
            _ => None,
        }
    }

    /// All violations, in rect order; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.epsilon <= Rational::ZERO || self.epsilon >= Rational::ONE {
            out.push(Violation::EpsilonOutOfRange(self.epsilon));
        }
        let mut seen = HashSet::new();
        for rect in &self.rects {
            if !seen.insert(rect.id.as_str()) {
                out.push(Violation::DuplicateId(rect.id.clone()));
            }
            if rect.x_left >= rect.x_right {
                out.push(Violation::EmptyWidth(rect.id.clone()));
            }
            if rect.y_top.is_some_and(|t| t != rect.top()) {
                out.push(Violation::WrongHeight(rect.id.clone()));
            }
            let lo = rect.y_bottom <= self.lower_line() && self.lower_line() <= rect.top();
            let hi = rect.y_bottom <= self.upper_line() && self.upper_line() <= rect.top();
            match (lo, hi) {
                (false, false) => out.push(Violation::CrossesNoStabLine(rect.id.clone())),
                (true, true) => out.push(Violation::CrossesBothStabLines(rect.id.clone())),
                _ => {}
            }
            if self.flags.unit_squares && rect.width() != Rational::ONE {
                out.push(Violation::NotUnitSquare(rect.id.clone()));
            }
        }
        if self.flags.proper {
            if let Some((a, b)) = self.first_proper_containment() {
                out.push(Violation::ProperContainment {
                    outer: self.rects[a].id.clone(),
                    inner: self.rects[b].id.clone(),
                });
            }
        }
        out
    }

    fn first_proper_containment(&self) -> Option<(usize, usize)> {
        for (i, a) in self.rects.iter().enumerate() {
            for (j, b) in self.rects.iter().enumerate() {
                if i != j && a.properly_contains_x(b) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn check(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::Invalid(v)),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.rects.iter().all(|r| r.width() == Rational::ONE)
    }

    pub fn is_proper(&self) -> bool {
        self.first_proper_containment().is_none()
    }

    /// Sub-representation keeping the rects at `keep` (in that order).
    pub fn restrict(&self, keep: &[usize]) -> StabRepresentation {
        StabRepresentation {
            epsilon: self.epsilon,
            rects: keep.iter().map(|&i| self.rects[i].clone()).collect(),
            flags: self.flags,
        }
    }

    /// Same intersection graph under another ε.
    ///
    /// Cross-band adjacency depends only on the sign of
    /// `y_lower - (y_upper - 1 - ε) - ε`; the band offsets are scaled by a
    /// common factor and shifted so that sign is preserved for the new ε.
    pub fn rescale_epsilon(&self, new_epsilon: Rational) -> Result<StabRepresentation> {
        let old = self.epsilon;
        let half = r(1, 2);
        let lam = half.min((Rational::ONE - new_epsilon) / (Rational::ONE - old));
        // a - b = new_eps - lam * old, with a, b in [0, 1 - lam].
        let diff = new_epsilon - lam * old;
        let (a, b) = if diff >= Rational::ZERO { (diff, Rational::ZERO) } else { (Rational::ZERO, -diff) };
        let mut out = self.clone();
        out.epsilon = new_epsilon;
        for rect in &mut out.rects {
            match self.side_of(rect) {
                Some(Side::Lower) => rect.y_bottom = lam * rect.y_bottom + a,
                Some(Side::Upper) => {
                    let t = rect.y_bottom - Rational::ONE - old;
                    rect.y_bottom = Rational::ONE + new_epsilon + lam * t + b;
                }
                None => return Err(Error::Invalid(Violation::CrossesNoStabLine(rect.id.clone()))),
            }
            rect.y_top = None;
        }
        Ok(out)
    }
}

impl Default for StabRepresentation {
    fn default() -> Self {
        StabRepresentation::new()
    }
}

/// Intersection graph: one vertex per rect (rect order), adjacency iff the
/// closed rectangles meet.
pub fn intersection_graph(rep: &StabRepresentation) -> Result<Graph> {
    rep.check()?;
    Ok(raw_intersection_graph(&rep.rects))
}

pub(crate) fn raw_intersection_graph(rects: &[UnitRect]) -> Graph {
    let mut g = Graph::new(rects.iter().map(|r| r.id.clone())).expect("ids validated distinct");
    for i in 0..rects.len() {
        for j in i + 1..rects.len() {
            if rects[i].intersects(&rects[j]) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn validate_representation(rep: &StabRepresentation) -> Vec<Violation> {
    rep.validate()
}

pub fn parse_representation(text: &str) -> Result<StabRepresentation> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_representation(path: impl AsRef<Path>) -> Result<StabRepresentation> {
    parse_representation(&std::fs::read_to_string(path)?)
}

pub fn to_json(rep: &StabRepresentation) -> String {
    let mut s = serde_json::to_string_pretty(rep).expect("serializable");
    s.push('\n');
    s
}

pub fn write_representation(rep: &StabRepresentation, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(rep))?;
    Ok(())
}

/// A validated representation together with its intersection graph and the
/// side of every vertex. Vertex `i` of the graph is `rep.rects[i]`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub rep: StabRepresentation,
    pub graph: Graph,
    pub sides: Vec<Side>,
}

impl Instance {
    pub fn new(rep: &StabRepresentation) -> Result<Self> {
        let graph = intersection_graph(rep)?;
        let sides = rep.rects.iter().map(|r| rep.side_of(r).expect("validated")).collect();
        Ok(Instance { rep: rep.clone(), graph, sides })
    }

    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn side_vertices(&self, side: Side) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.sides[v] == side).collect()
    }

    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        self.sides[u] != self.sides[v] && self.graph.has_edge(u, v)
    }

    pub fn rect(&self, v: usize) -> &UnitRect {
        &self.rep.rects[v]
    }

    pub fn name(&self, v: usize) -> &str {
        self.graph.name(v)
    }

    /// Unit squares on both sides.
    pub fn is_2suig(&self) -> bool {
        self.rep.is_unit()
    }

    /// Upper partition induces an independent set.
    pub fn is_2siig(&self) -> bool {
        self.graph.is_independent(&self.side_vertices(Side::Upper))
    }

    pub fn is_2suiig(&self) -> bool {
        self.is_2suig() && self.is_2siig()
    }

    pub fn require_2suig(&self) -> Result<()> {
        match self.rep.rects.iter().find(|r| r.width() != Rational::ONE) {
            None => Ok(()),
            Some(r) => Err(Error::ClassMismatch {
                class: "2SUIG",
                reason: format!("{:?} has width {}", r.id, r.width()),
            }),
        }
    }

    pub fn require_2siig(&self) -> Result<()> {
        let up = self.side_vertices(Side::Upper);
        for (i, &a) in up.iter().enumerate() {
            for &b in &up[i + 1..] {
                if self.graph.has_edge(a, b) {
                    return Err(Error::ClassMismatch {
                        class: "2SIIG",
                        reason: format!("upper vertices {:?} and {:?} are adjacent", self.name(a), self.name(b)),
                    });
                }
            }
        }
        Ok(())
    }

    /// Left-to-right order of a subset of vertices: `x_left`, then id.
    pub fn sort_left(&self, vs: &mut [usize]) {
        vs.sort_by(|&a, &b| {
            let (ra, rb) = (self.rect(a), self.rect(b));
            ra.x_left.cmp(&rb.x_left).then_with(|| ra.id.cmp(&rb.id))
        });
    }
}
