use std::fmt;

use serde::Serialize;

use super::{Fragment, FragmentError};
use crate::fullerene::Fullerene;
use crate::graph::edge_subgraph;
use crate::Mask;

/// Lengths of the degree-saturated paths between consecutive 2-degree
/// vertices of a boundary cycle, as the lexicographically largest reading
/// over all starting points and both directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BoundaryLabeling(pub Vec<usize>);

impl BoundaryLabeling {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the entries, which is the length of the boundary.
    pub fn boundary_length(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for BoundaryLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&x| x < 10) {
            ""
        } else {
            ","
        };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

fn max_rotation(seq: &[usize]) -> Vec<usize> {
    (0..seq.len())
        .map(|r| {
            seq[r..]
                .iter()
                .chain(&seq[..r])
                .copied()
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or_default()
}

/// Labeling of a closed walk `cycle`, with `two_degree` marking the vertices
/// that split it into paths.
pub fn labeling_of_cycle(
    cycle: &[usize],
    two_degree: impl Fn(usize) -> bool,
) -> Result<BoundaryLabeling, FragmentError> {
    let marks: Vec<usize> = (0..cycle.len()).filter(|&i| two_degree(cycle[i])).collect();
    if marks.is_empty() {
        return Err(FragmentError::NoTwoDegreeVertices);
    }
    let runs: Vec<usize> = (0..marks.len())
        .map(|i| {
            let next = marks[(i + 1) % marks.len()];
            (next + cycle.len() - marks[i] - 1) % cycle.len() + 1
        })
        .collect();
    let mut reversed = runs.clone();
    reversed.reverse();
    Ok(BoundaryLabeling(
        max_rotation(&runs).max(max_rotation(&reversed)),
    ))
}

/// Labeling of the boundary of a simply connected fragment.
pub fn boundary_labeling(g: &Fragment) -> Result<BoundaryLabeling, FragmentError> {
    let w = g.w();
    labeling_of_cycle(g.boundary(), |v| w.binary_search(&v).is_ok())
}

/// Labelings of every face of the plane subgraph formed by `edges`, with
/// degrees taken inside that subgraph. Faces without a 2-degree vertex are
/// skipped.
pub fn face_labelings(
    f: &Fullerene,
    edges: &[(usize, usize)],
) -> Vec<(Vec<usize>, BoundaryLabeling)> {
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let keep = |u: usize, v: usize| edges.contains(&(u, v)) || edges.contains(&(v, u));
    let sub = edge_subgraph(f.rotation(), &vertices, keep);
    sub.host_faces()
        .into_iter()
        .filter_map(|cycle| {
            labeling_of_cycle(&cycle, |v| sub.host_degree(v) == 2)
                .ok()
                .map(|l| (cycle, l))
        })
        .collect()
}

/// Edges of the subgraph induced by the vertices of `faces`, less the
/// vertices in `removed`.
pub fn induced_extension(f: &Fullerene, faces: &[usize], removed: Mask) -> Vec<(usize, usize)> {
    let keep = faces.iter().fold(0 as Mask, |m, &g| m | f.face_mask(g)) & !removed;
    f.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| keep >> u & 1 == 1 && keep >> v & 1 == 1)
        .collect()
}
