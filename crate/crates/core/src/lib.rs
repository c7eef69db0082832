//! Construction, analysis and verification of 2-stab interval graphs.
//!
//! A 2-stab representation is a family of unit-height, axis-parallel
//! rectangles, each crossing exactly one of the horizontal stab lines
//! `y = 1` (lower) and `y = 2 + ε` (upper). Its intersection graph splits into
//! two interval graphs joined by *bridge edges*. This crate provides:
//!
//! * [`rep`], [`graph`], [`partition`]: the geometric model, intersection
//!   graphs, and the lower/upper/bridge decomposition;
//! * [`interval`]: per-side orderings, complement orientations, SNIR matrices
//!   and proper interval recognition;
//! * [`cliques`]: bridge-edge labeling and maximal clique enumeration;
//! * [`coloring`]: colorings realizing the clique-number bounds;
//! * [`matrix`]: PSA / ISSR predicates, ISSR construction and geometric
//!   reconstruction;
//! * [`oracle`]: brute-force references, class conversions and seeded
//!   instance generators.

pub mod cliques;
pub mod coloring;
pub mod graph;
pub mod interval;
pub mod matrix;
pub mod oracle;
pub mod partition;
mod placement;
pub mod presets;
pub mod rational;
pub mod rep;

pub use graph::Graph;
pub use partition::StabPartition;
pub use rational::Rational;
pub use rep::{Instance, Side, StabRepresentation, UnitRect, Violation};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Rational(String),
    #[error("arithmetic overflow in rational coordinate")]
    Overflow,
    #[error("invalid representation: {0}")]
    Invalid(Violation),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("{0:?} is not a bridge vertex")]
    NotBridgeVertex(String),
    #[error("representation is not in class {class}: {reason}")]
    ClassMismatch { class: &'static str, reason: String },
    #[error("graph contains the triangle {0:?}")]
    HasTriangle([String; 3]),
    #[error("representation contains the bridge triangle {0:?}")]
    BridgeTriangle([String; 3]),
    #[error("bridge vertices are not 2-colorable; odd cycle {0:?}")]
    BridgeVerticesOddCycle(Vec<String>),
    #[error("bridge edges do not form disjoint paths: {0}")]
    BridgeGraphNotPaths(String),
    #[error("partition is not strict: upper vertex {0:?} extends the lower unit interval graph")]
    NotStrict(String),
    #[error("inconsistent column ordering constraints among upper vertices {0:?}")]
    ColumnOrderCycle(Vec<String>),
    #[error("bridge labeling is cyclic at edge {0:?}")]
    LabelCycle((String, String)),
    #[error("matrix violation {clause}: {detail}")]
    Matrix { clause: String, detail: String },
    #[error("cannot place upper column {column}: {reason}")]
    Placement { column: usize, reason: String },
    #[error("no coloring found: {0}")]
    NoColoring(String),
    #[error("size guard exceeded: {n} vertices > limit {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("generator retries exhausted for {0}")]
    RetriesExhausted(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
