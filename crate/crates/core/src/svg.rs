//! Static SVG drawings of fullerenes from a Tutte barycentric embedding.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::fullerene::Fullerene;
use crate::matching::Matching;

const SIZE: f64 = 600.0;
const ROUNDS: usize = 4000;

/// The largest face, avoiding `avoid` where possible, lowest id on ties.
pub fn outer_face(f: &Fullerene, avoid: &[usize]) -> usize {
    (0..f.face_count())
        .max_by_key(|&g| (f.face(g).len(), !avoid.contains(&g), std::cmp::Reverse(g)))
        .expect("a fullerene has faces")
}

/// Barycentric coordinates in the unit disk with face `outer` pinned to a
/// regular polygon. Fixed iteration count, so output is reproducible.
pub fn tutte_layout(f: &Fullerene, outer: usize) -> Vec<(f64, f64)> {
    let n = f.order();
    let mut pos = vec![(0.0, 0.0); n];
    let mut pinned = vec![false; n];
    let ring = f.face(outer);
    for (i, &v) in ring.iter().enumerate() {
        let a = TAU * i as f64 / ring.len() as f64;
        pos[v] = (a.cos(), a.sin());
        pinned[v] = true;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| f.rotation().neighbors(v).to_vec()).collect();
    for _ in 0..ROUNDS {
        for v in 0..n {
            if pinned[v] {
                continue;
            }
            let (sx, sy) = adj[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let k = adj[v].len() as f64;
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

/// Draws `f` with a circle in each face of `circled`, `matching` edges
/// doubled and `shaded` faces filled.
pub fn render(
    f: &Fullerene,
    circled: &[usize],
    matching: Option<&Matching>,
    shaded: &[usize],
) -> String {
    let mut avoid = circled.to_vec();
    avoid.extend(shaded);
    let outer = outer_face(f, &avoid);
    let raw = tutte_layout(f, outer);
    let half = SIZE / 2.0;
    let pos: Vec<(f64, f64)> = raw
        .iter()
        .map(|&(x, y)| (half + x * (half - 20.0), half - y * (half - 20.0)))
        .collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for &g in shaded {
        if g == outer {
            continue;
        }
        let pts: Vec<String> = f
            .face(g)
            .iter()
            .map(|&v| format!("{:.2},{:.2}", pos[v].0, pos[v].1))
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#f2d98c"/>"##,
            pts.join(" ")
        );
    }
    for &(u, v) in f.edges() {
        let (a, b) = (pos[u], pos[v]);
        if matching.is_some_and(|m| m.contains(u, v)) {
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let (ox, oy) = (-dy / len * 2.0, dx / len * 2.0);
            for sign in [-1.0, 1.0] {
                let _ = writeln!(
                    s,
                    r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000000" stroke-width="1.2"/>"##,
                    a.0 + sign * ox,
                    a.1 + sign * oy,
                    b.0 + sign * ox,
                    b.1 + sign * oy
                );
            }
        } else {
            let _ = writeln!(
                s,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000000" stroke-width="1.2"/>"##,
                a.0, a.1, b.0, b.1
            );
        }
    }
    for &g in circled {
        if g == outer {
            continue;
        }
        let c = f.face(g);
        let k = c.len() as f64;
        let (cx, cy) = c.iter().fold((0.0, 0.0), |(x, y), &v| {
            (x + pos[v].0 / k, y + pos[v].1 / k)
        });
        let r = c
            .iter()
            .map(|&v| ((pos[v].0 - cx).powi(2) + (pos[v].1 - cy).powi(2)).sqrt())
            .fold(f64::MAX, f64::min)
            * 0.6;
        let _ = writeln!(
            s,
            r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="none" stroke="#c0392b" stroke-width="1.5"/>"##
        );
    }
    s.push_str("</svg>\n");
    s
}
