//! Validated fullerene graphs with precomputed face structure.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{is_three_connected, trace_faces, GraphError, RotationSystem};
use crate::Mask;

/// Largest vertex count the bitmask-based solvers can hold.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FullereneError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("face {face} has size {size}; only pentagons and hexagons are allowed")]
    BadFaceSizes { face: usize, size: usize },
    #[error("found {0} pentagons, a fullerene has exactly 12")]
    WrongPentagonCount(usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A cubic 3-connected plane graph with twelve pentagonal faces and all
/// other faces hexagonal.
#[derive(Debug, Clone)]
pub struct Fullerene {
    rot: RotationSystem,
    faces: Vec<Vec<usize>>,
    pentagons: Vec<usize>,
    hexagons: Vec<usize>,
    face_adjacency: Vec<Vec<usize>>,
    vertex_faces: Vec<[usize; 3]>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    edge_faces: Vec<[usize; 2]>,
    adjacency: Vec<Mask>,
    face_masks: Vec<Mask>,
}

/// Accepts `rot` as a fullerene or reports the first violated condition.
pub fn validate(rot: &RotationSystem) -> Result<Fullerene, FullereneError> {
    Fullerene::new(rot.clone())
}

impl Fullerene {
    pub fn new(rot: RotationSystem) -> Result<Self, FullereneError> {
        let n = rot.order();
        if let Some(v) = (0..n).find(|&v| rot.degree(v) != 3) {
            return Err(FullereneError::NotCubic {
                vertex: v,
                degree: rot.degree(v),
            });
        }
        if n > MAX_VERTICES {
            return Err(FullereneError::TooLarge(n));
        }
        let faces = trace_faces(&rot)?.faces;
        if let Some((i, f)) = faces
            .iter()
            .enumerate()
            .find(|(_, f)| f.len() != 5 && f.len() != 6)
        {
            return Err(FullereneError::BadFaceSizes {
                face: i,
                size: f.len(),
            });
        }
        let pentagons: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].len() == 5).collect();
        if pentagons.len() != 12 {
            return Err(FullereneError::WrongPentagonCount(pentagons.len()));
        }
        if !is_three_connected(&rot) {
            return Err(FullereneError::NotThreeConnected);
        }
        Ok(Self::assemble(rot, faces))
    }

    fn assemble(rot: RotationSystem, faces: Vec<Vec<usize>>) -> Self {
        let n = rot.order();
        let pentagons = (0..faces.len()).filter(|&i| faces[i].len() == 5).collect();
        let hexagons = (0..faces.len()).filter(|&i| faces[i].len() == 6).collect();
        let mut dart_face = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for k in 0..f.len() {
                dart_face.insert((f[k], f[(k + 1) % f.len()]), i);
            }
        }
        let face_adjacency = faces
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|k| dart_face[&(f[(k + 1) % f.len()], f[k])])
                    .collect()
            })
            .collect();
        let mut vertex_faces = vec![[usize::MAX; 3]; n];
        for v in 0..n {
            let nb = rot.neighbors(v);
            for k in 0..3 {
                vertex_faces[v][k] = dart_face[&(v, nb[k])];
            }
        }
        let edges = rot.edges();
        let edge_index: HashMap<_, _> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let edge_faces = edges
            .iter()
            .map(|&(u, v)| [dart_face[&(u, v)], dart_face[&(v, u)]])
            .collect();
        let adjacency = (0..n)
            .map(|v| rot.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
            .collect();
        let face_masks = faces
            .iter()
            .map(|f| f.iter().fold(0, |m: Mask, &v| m | (1 << v)))
            .collect();
        Fullerene {
            rot,
            faces,
            pentagons,
            hexagons,
            face_adjacency,
            vertex_faces,
            edges,
            edge_index,
            edge_faces,
            adjacency,
            face_masks,
        }
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rot
    }

    pub fn order(&self) -> usize {
        self.rot.order()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_pentagon(&self, f: usize) -> bool {
        self.faces[f].len() == 5
    }

    pub fn pentagons(&self) -> &[usize] {
        &self.pentagons
    }

    pub fn hexagons(&self) -> &[usize] {
        &self.hexagons
    }

    /// Faces adjacent to `f`, in the cyclic order of `f`'s boundary: entry
    /// `k` lies across the edge `face(f)[k] -> face(f)[k+1]`.
    pub fn face_neighbors(&self, f: usize) -> &[usize] {
        &self.face_adjacency[f]
    }

    pub fn faces_adjacent(&self, f: usize, g: usize) -> bool {
        self.face_adjacency[f].contains(&g)
    }

    /// The three faces around `v`.
    pub fn vertex_faces(&self, v: usize) -> [usize; 3] {
        self.vertex_faces[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_index.get(&key).copied()
    }

    /// The two faces on either side of edge `e`.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn adjacency_masks(&self) -> &[Mask] {
        &self.adjacency
    }

    pub fn face_mask(&self, f: usize) -> Mask {
        self.face_masks[f]
    }

    /// Edges of face `f` as `(u, v)` pairs in boundary order.
    pub fn face_edges(&self, f: usize) -> Vec<(usize, usize)> {
        let c = &self.faces[f];
        (0..c.len()).map(|k| (c[k], c[(k + 1) % c.len()])).collect()
    }

    /// Dual triangulation: vertex `f` is face `f`, neighbors in
    /// `face_neighbors` order.
    pub fn dual_rotation(&self) -> RotationSystem {
        RotationSystem::new(self.face_adjacency.clone()).expect("fullerene duals are simple")
    }

    /// Face sizes indexed by face id.
    pub fn face_sizes(&self) -> Vec<u8> {
        self.faces.iter().map(|f| f.len() as u8).collect()
    }

    pub fn relabel(&self, perm: &[usize]) -> Fullerene {
        let rot = self.rot.relabel(perm);
        let faces = trace_faces(&rot)
            .expect("relabelling keeps the embedding")
            .faces;
        Self::assemble(rot, faces)
    }

    pub fn mirror(&self) -> Fullerene {
        let rot = self.rot.mirror();
        let faces = trace_faces(&rot).expect("mirror keeps the embedding").faces;
        Self::assemble(rot, faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn accepts_dodecahedron_and_c60() {
        let d = validate(&fixtures::dodecahedron()).unwrap();
        assert_eq!(d.pentagons().len(), 12);
        assert!(d.hexagons().is_empty());
        let c = validate(&fixtures::ih_c60()).unwrap();
        assert_eq!(c.hexagons().len(), 20);
        assert_eq!(c.hexagons().len(), c.order() / 2 - 10);
    }

    #[test]
    fn rejects_cube() {
        let mut nb = vec![Vec::new(); 8];
        for i in 0..4 {
            let j = (i + 1) % 4;
            let p = (i + 3) % 4;
            nb[i] = vec![j, p, 4 + i];
            nb[4 + i] = vec![4 + p, 4 + j, i];
        }
        let cube = RotationSystem::cubic(nb).unwrap();
        assert!(matches!(
            validate(&cube),
            Err(FullereneError::BadFaceSizes { size: 4, .. })
        ));
    }

    #[test]
    fn face_adjacency_is_symmetric() {
        let c = validate(&fixtures::ih_c60()).unwrap();
        for f in 0..c.face_count() {
            for &g in c.face_neighbors(f) {
                assert!(c.faces_adjacent(g, f));
            }
            // isolated pentagons in C60
            if c.is_pentagon(f) {
                assert!(c.face_neighbors(f).iter().all(|&g| !c.is_pentagon(g)));
            }
        }
    }
}
