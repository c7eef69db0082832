//! Static SVG figures: the rectangles with both stab lines on the left, the
//! intersection graph on the right (lower side bottom row, upper side top
//! row, bridge edges dashed).

use std::fmt::Write as _;

use twostab::{Instance, Rational, Side, StabPartition, StabRepresentation};

const UNIT: f64 = 60.0;
const PAD: f64 = 30.0;
const GAP: f64 = 60.0;
const NODE_R: f64 = 9.0;
const NODE_STEP: f64 = 50.0;

fn f(x: Rational) -> f64 {
    x.to_f64()
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render(rep: &StabRepresentation) -> twostab::Result<String> {
    let inst = Instance::new(rep)?;
    let lines = [f(rep.lower_line()), f(rep.upper_line())];
    let (mut x0, mut x1) = (0.0, 4.0);
    let (mut y0, mut y1) = (lines[0] - 0.5, lines[1] + 0.5);
    for r in &rep.rects {
        x0 = f64::min(x0, f(r.x_left));
        x1 = f64::max(x1, f(r.x_right));
        y0 = f64::min(y0, f(r.y_bottom));
        y1 = f64::max(y1, f(r.top()));
    }
    let panel_w = (x1 - x0) * UNIT;
    let panel_h = (y1 - y0) * UNIT;
    let px = |x: f64| PAD + (x - x0) * UNIT;
    let py = |y: f64| PAD + (y1 - y) * UNIT;

    let mut lower = inst.side_vertices(Side::Lower);
    let mut upper = inst.side_vertices(Side::Upper);
    inst.sort_left(&mut lower);
    inst.sort_left(&mut upper);
    let row_len = lower.len().max(upper.len());
    let graph_w = if rep.is_empty() { 0.0 } else { GAP + (row_len.max(1) as f64) * NODE_STEP };
    let width = 2.0 * PAD + panel_w + graph_w;
    let height = 2.0 * PAD + panel_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}" font-family="sans-serif" font-size="12">"#
    );
    for y in lines {
        let _ = writeln!(
            s,
            r##"<line class="stab" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#555" stroke-dasharray="1,4" stroke-linecap="round"/>"##,
            PAD,
            py(y),
            PAD + panel_w,
            py(y)
        );
    }
    for (v, r) in rep.rects.iter().enumerate() {
        let fill = if inst.sides[v] == Side::Lower { "#dbe8f6" } else { "#f6e3cf" };
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{fill}" fill-opacity="0.6" stroke="#222"/>"##,
            px(f(r.x_left)),
            py(f(r.top())),
            f(r.width()) * UNIT,
            UNIT
        );
    }
    for r in &rep.rects {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            px((f(r.x_left) + f(r.x_right)) / 2.0),
            py(f(r.y_bottom) + 0.5),
            esc(&r.id)
        );
    }

    if !rep.is_empty() {
        let gx = PAD + panel_w + GAP;
        let mut pos = vec![(0.0, 0.0); inst.n()];
        for (row, vs) in [(py(lines[1]), &upper), (py(lines[0]), &lower)] {
            for (i, &v) in vs.iter().enumerate() {
                pos[v] = (gx + NODE_STEP * (i as f64 + 0.5), row);
            }
        }
        let part = StabPartition::from_instance(&inst);
        for (u, v) in inst.graph.edges() {
            let ((ax, ay), (bx, by)) = (pos[u], pos[v]);
            if part.is_bridge_edge(u, v) {
                let _ = writeln!(
                    s,
                    r##"<line class="bridge" x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="#222" stroke-dasharray="6,4"/>"##
                );
            } else {
                // Same row: bow away from the other row so chords stay apart.
                let bow = (bx - ax).abs() / 4.0 * if inst.sides[u] == Side::Lower { 1.0 } else { -1.0 };
                let _ = writeln!(
                    s,
                    r##"<path d="M {ax:.2} {ay:.2} Q {:.2} {:.2} {bx:.2} {by:.2}" fill="none" stroke="#222"/>"##,
                    (ax + bx) / 2.0,
                    ay + bow
                );
            }
        }
        for (v, &(x, y)) in pos.iter().enumerate() {
            let _ = writeln!(
                s,
                r##"<circle cx="{x:.2}" cy="{y:.2}" r="{NODE_R:.2}" fill="#fff" stroke="#222"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                y - NODE_R - 4.0,
                esc(inst.name(v))
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
