//! Hand-built representations used as fixtures and tight-bound witnesses.
//!
//! All presets use ε = 1/2, so lower rects have `y_bottom ∈ [0, 1]` and upper
//! rects `y_bottom ∈ [3/2, 5/2]`. A lower rect at height `y` and an upper rect
//! at `3/2 + t` meet vertically iff `y - t ≥ 1/2`.

use crate::rational::{r, Rational};
use crate::rep::{StabRepresentation, UnitRect};

fn rect(id: &str, xl: Rational, xr: Rational, yb: Rational) -> UnitRect {
    UnitRect::new(id, xl, xr, yb)
}

fn sq(id: &str, s: Rational, yb: Rational) -> UnitRect {
    UnitRect::square(id, s, yb)
}

/// Five rectangles whose intersection graph is the 5-cycle a-b-c-d-e-a,
/// with a, b crossing the lower line. x-extents follow the drawing; heights
/// are chosen so the bridges are exactly ae and bc.
pub fn fig1() -> StabRepresentation {
    StabRepresentation::with_rects(vec![
        rect("a", r(4, 1), r(5, 1), r(1, 1)),
        rect("b", r(24, 5), r(29, 5), r(4, 5)),
        rect("c", r(26, 5), r(31, 5), r(3, 2)),
        rect("d", r(22, 5), r(27, 5), r(11, 5)),
        rect("e", r(7, 2), r(9, 2), r(3, 2)),
    ])
}

/// Lower path u1..u6 with chord u3u5; independent upper w1..w4; bridges
/// u1w1, u2w2, u4w3, u4w4. Unit squares, bridge-triangle-free, 2SIIG.
pub fn fig2() -> StabRepresentation {
    let hi = Rational::ONE;
    let lo = Rational::ZERO;
    let up = r(3, 2);
    let mut rep = StabRepresentation::with_rects(vec![
        sq("u1", r(0, 1), hi),
        sq("u2", r(9, 10), hi),
        sq("u3", r(9, 5), lo),
        sq("u4", r(23, 10), hi),
        sq("u5", r(27, 10), lo),
        sq("u6", r(18, 5), lo),
        sq("w1", r(-1, 2), up),
        sq("w2", r(11, 10), up),
        sq("w3", r(11, 5), up),
        sq("w4", r(13, 4), up),
    ]);
    rep.flags.unit_squares = true;
    rep
}

/// Lower path w-x-y-z, independent upper {a, b}; bridges wa, ya, xb, yb.
pub fn fig3() -> StabRepresentation {
    let mut rep = StabRepresentation::with_rects(vec![
        sq("w", r(0, 1), r(1, 1)),
        sq("x", r(9, 10), r(1, 2)),
        sq("y", r(9, 5), r(1, 1)),
        sq("z", r(27, 10), r(1, 4)),
        sq("a", r(17, 20), r(7, 4)),
        sq("b", r(15, 8), r(3, 2)),
    ]);
    rep.flags.unit_squares = true;
    rep
}

/// The 5-cycle as a 2SUIIG: lower path e-a-b-c, upper {d} bridged to e and c.
/// The partition is strict.
pub fn c5_2suiig() -> StabRepresentation {
    let hi = Rational::ONE;
    let lo = Rational::ZERO;
    let mut rep = StabRepresentation::with_rects(vec![
        sq("e", r(0, 1), hi),
        sq("a", r(3, 5), lo),
        sq("b", r(6, 5), lo),
        sq("c", r(9, 5), hi),
        sq("d", r(9, 10), r(3, 2)),
    ]);
    rep.flags.unit_squares = true;
    rep
}

/// Single bridge: one unit square per stab line, overlapping.
pub fn k2_bridge() -> StabRepresentation {
    let mut rep = StabRepresentation::with_rects(vec![
        sq("p", Rational::ZERO, Rational::ONE),
        sq("q", r(1, 2), r(3, 2)),
    ]);
    rep.flags.unit_squares = true;
    rep
}

/// `k_lower + k_upper` unit squares stacked at the same x: the complete graph,
/// attaining the upper bounds ω = ω(V1) + ω(V2) and χ = χ(V1) + χ(V2).
pub fn complete_split(k_lower: usize, k_upper: usize) -> StabRepresentation {
    let mut rects = Vec::new();
    for i in 0..k_lower {
        rects.push(sq(&format!("l{i}"), r(i as i64, 100), Rational::ONE));
    }
    for i in 0..k_upper {
        rects.push(sq(&format!("h{i}"), r(i as i64, 100), r(3, 2)));
    }
    let mut rep = StabRepresentation::with_rects(rects);
    rep.flags.unit_squares = true;
    rep
}

/// Lower clique of size `k_lower` and upper path of `n_upper` squares,
/// with all lower rects too low to reach the upper band: no bridges, so
/// ω = max side ω and χ = max side χ.
pub fn bridge_free(k_lower: usize, n_upper: usize) -> StabRepresentation {
    let mut rects = Vec::new();
    for i in 0..k_lower {
        rects.push(sq(&format!("l{i}"), r(i as i64, 10), Rational::ZERO));
    }
    for i in 0..n_upper {
        rects.push(sq(&format!("h{i}"), r(9 * i as i64, 10), r(3, 2)));
    }
    let mut rep = StabRepresentation::with_rects(rects);
    rep.flags.unit_squares = true;
    rep
}
