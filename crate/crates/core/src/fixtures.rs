//! Hand-built reference graphs that do not go through the spiral code.

use std::collections::HashMap;
use std::f64::consts::TAU;

use crate::graph::{self, trace_faces, RotationSystem};

/// Rotation system of a straight-line planar drawing: neighbors sorted by
/// angle around each vertex.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(usize, usize)]) -> RotationSystem {
    let mut nb = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        nb[u].push(v);
        nb[v].push(u);
    }
    for (v, l) in nb.iter_mut().enumerate() {
        let (x, y) = points[v];
        l.sort_by(|&a, &b| {
            let ta = (points[a].1 - y).atan2(points[a].0 - x);
            let tb = (points[b].1 - y).atan2(points[b].0 - x);
            ta.total_cmp(&tb)
        });
    }
    RotationSystem::new(nb).expect("drawing is a simple graph")
}

/// The dodecahedron (the unique 20-vertex fullerene) from its Schlegel
/// diagram: outer pentagon, a ring of ten, inner pentagon.
pub fn dodecahedron() -> RotationSystem {
    let polar = |r: f64, turns: f64| (r * (TAU * turns).cos(), r * (TAU * turns).sin());
    let mut pts = Vec::new();
    for i in 0..5 {
        pts.push(polar(3.0, i as f64 / 5.0));
    }
    for j in 0..10 {
        pts.push(polar(2.0, j as f64 / 10.0));
    }
    for i in 0..5 {
        pts.push(polar(1.0, (2 * i + 1) as f64 / 10.0));
    }
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + 2 * i));
        edges.push((5 + 2 * i + 1, 15 + i));
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    from_drawing(&pts, &edges)
}

/// Planar dual; panics if it is not simple.
pub fn dual(rot: &RotationSystem) -> RotationSystem {
    graph::dual(rot).expect("dual of a 3-connected plane graph is simple")
}

/// Cuts every vertex off, replacing a degree-d vertex by a d-cycle.
pub fn truncate(rot: &RotationSystem) -> RotationSystem {
    let mut id = HashMap::new();
    for x in 0..rot.order() {
        for &y in rot.neighbors(x) {
            let k = id.len();
            id.insert((x, y), k);
        }
    }
    let build = |flip: bool| {
        let mut nb = vec![Vec::new(); id.len()];
        for x in 0..rot.order() {
            for &y in rot.neighbors(x) {
                let next = rot.next_ccw(x, y);
                let prev = rot.next_cw(x, y);
                let (a, b) = if flip { (prev, next) } else { (next, prev) };
                nb[id[&(x, y)]] = vec![id[&(y, x)], id[&(x, a)], id[&(x, b)]];
            }
        }
        RotationSystem::cubic(nb).expect("truncation is cubic")
    };
    let first = build(false);
    if trace_faces(&first).is_ok() {
        first
    } else {
        build(true)
    }
}

/// Leapfrog transform: truncation of the dual.
pub fn leapfrog(rot: &RotationSystem) -> RotationSystem {
    truncate(&dual(rot))
}

/// Buckminsterfullerene as the leapfrog of the dodecahedron.
pub fn ih_c60() -> RotationSystem {
    leapfrog(&dodecahedron())
}

/// Pentagon positions in the canonical spirals of the 18 extremal
/// 60-vertex fullerenes, paired with their one-based index in spiral order.
pub const EXTREMAL_C60: [(usize, [usize; 12]); 18] = [
    (43, [1, 2, 3, 4, 7, 10, 23, 26, 29, 30, 31, 32]),
    (44, [1, 2, 3, 4, 7, 10, 25, 28, 29, 30, 31, 32]),
    (1113, [1, 2, 4, 7, 9, 12, 21, 24, 26, 29, 31, 32]),
    (1114, [1, 2, 4, 7, 9, 12, 21, 24, 27, 30, 31, 32]),
    (1123, [1, 2, 4, 7, 9, 13, 20, 24, 26, 29, 31, 32]),
    (1124, [1, 2, 4, 7, 9, 13, 20, 24, 27, 30, 31, 32]),
    (1247, [1, 2, 4, 7, 11, 15, 20, 24, 25, 28, 31, 32]),
    (1251, [1, 2, 4, 7, 11, 16, 20, 23, 25, 28, 31, 32]),
    (1279, [1, 2, 4, 7, 12, 16, 18, 22, 25, 28, 31, 32]),
    (1280, [1, 2, 4, 7, 12, 16, 18, 22, 27, 30, 31, 32]),
    (1283, [1, 2, 4, 7, 12, 16, 19, 23, 25, 28, 31, 32]),
    (1803, [1, 2, 9, 12, 14, 17, 20, 21, 23, 25, 26, 28]),
    (1804, [1, 2, 9, 12, 14, 17, 20, 21, 23, 25, 27, 32]),
    (1805, [1, 2, 9, 12, 14, 17, 20, 22, 25, 27, 30, 32]),
    (1808, [1, 2, 9, 12, 15, 17, 20, 21, 23, 24, 27, 32]),
    (1809, [1, 2, 9, 12, 15, 17, 20, 22, 24, 26, 28, 30]),
    (1810, [1, 2, 9, 12, 15, 17, 20, 22, 24, 27, 30, 32]),
    (1812, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c60_face_structure() {
        let c60 = ih_c60();
        assert_eq!(c60.order(), 60);
        let sizes = trace_faces(&c60).unwrap().sizes();
        assert_eq!(sizes.iter().filter(|&&s| s == 5).count(), 12);
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 20);
    }
}
