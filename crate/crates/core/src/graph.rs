//! Combinatorial embeddings of cubic plane graphs.
//!
//! A [`RotationSystem`] stores, for every vertex, its neighbors in
//! counterclockwise order. Faces are traced with the rule "from the dart
//! `u -> v`, continue with the neighbor of `v` that precedes `u` in `v`'s
//! counterclockwise list", which walks every face with its interior on the
//! left. Subgraphs keep the inherited cyclic order, so degree 1 and 2
//! vertices are allowed everywhere except in a top-level fullerene.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has {degree} neighbors, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} has neighbor {neighbor} outside 0..{n}")]
    OutOfRange {
        vertex: usize,
        neighbor: usize,
        n: usize,
    },
    #[error("adjacency is not symmetric: {0} lists {1} but not vice versa")]
    Asymmetric(usize, usize),
    #[error("not a sphere embedding: n - e + f = {0}, expected 2")]
    EulerViolation(i64),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Vertex adjacency in counterclockwise cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    neighbors: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Builds a rotation system after checking symmetry, loops and repeats.
    /// Vertices of any degree are accepted; see [`RotationSystem::cubic`].
    pub fn new(neighbors: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = neighbors.len();
        for (v, nbrs) in neighbors.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: v,
                        neighbor: w,
                        n,
                    });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if nbrs[..i].contains(&w) {
                    return Err(GraphError::RepeatedNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        for (v, nbrs) in neighbors.iter().enumerate() {
            for &w in nbrs {
                if !neighbors[w].contains(&v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(RotationSystem { neighbors })
    }

    /// Like [`RotationSystem::new`] but every vertex must have degree 3.
    pub fn cubic(neighbors: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if let Some((v, nbrs)) = neighbors.iter().enumerate().find(|(_, l)| l.len() != 3) {
            return Err(GraphError::NotCubic {
                vertex: v,
                degree: nbrs.len(),
            });
        }
        Self::new(neighbors)
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn is_cubic(&self) -> bool {
        self.neighbors.iter().all(|l| l.len() == 3)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].contains(&v)
    }

    /// All edges as `(u, v)` with `u < v`, sorted. The position in this list
    /// is the edge id used throughout the crate.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Neighbor of `v` that follows `u` counterclockwise.
    pub fn next_ccw(&self, v: usize, u: usize) -> usize {
        let l = &self.neighbors[v];
        let i = l.iter().position(|&x| x == u).expect("not a neighbor");
        l[(i + 1) % l.len()]
    }

    /// Neighbor of `v` that precedes `u` counterclockwise.
    pub fn next_cw(&self, v: usize, u: usize) -> usize {
        let l = &self.neighbors[v];
        let i = l.iter().position(|&x| x == u).expect("not a neighbor");
        l[(i + l.len() - 1) % l.len()]
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> RotationSystem {
        let mut neighbors = vec![Vec::new(); self.order()];
        for (v, l) in self.neighbors.iter().enumerate() {
            neighbors[perm[v]] = l.iter().map(|&w| perm[w]).collect();
        }
        RotationSystem { neighbors }
    }

    /// The mirror embedding: every cyclic order reversed.
    pub fn mirror(&self) -> RotationSystem {
        RotationSystem {
            neighbors: self
                .neighbors
                .iter()
                .map(|l| l.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Faces as closed walks, without any Euler check. Works for
    /// disconnected graphs and for vertices of degree 1 and 2.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let offsets = self.dart_offsets();
        let total = *offsets.last().unwrap_or(&0);
        let mut used = vec![false; total];
        let mut faces = Vec::new();
        for u in 0..self.order() {
            for i in 0..self.degree(u) {
                if used[offsets[u] + i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, self.neighbors[u][i]);
                loop {
                    let idx = offsets[a] + self.neighbors[a].iter().position(|&x| x == b).unwrap();
                    if used[idx] {
                        break;
                    }
                    used[idx] = true;
                    face.push(a);
                    let c = self.next_cw(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    fn dart_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.order() + 1);
        let mut acc = 0;
        offsets.push(0);
        for l in &self.neighbors {
            acc += l.len();
            offsets.push(acc);
        }
        offsets
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || reachable(self, 0, &[]).iter().all(|&r| r)
    }
}

/// Vertices reachable from `start` avoiding `removed`.
fn reachable(rot: &RotationSystem, start: usize, removed: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; rot.order()];
    for &r in removed {
        seen[r] = true;
    }
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        for &w in rot.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for &r in removed {
        seen[r] = false;
    }
    seen
}

/// The faces of a sphere embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face lengths, sorted ascending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<_> = self.faces.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }
}

/// Planar dual of a connected plane graph; vertex `i` of the result is
/// face `i` of `rot.faces()`, with neighbors in the same cyclic sense.
pub fn dual(rot: &RotationSystem) -> Result<RotationSystem, GraphError> {
    let faces = rot.faces();
    let mut face_of = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..f.len() {
            face_of.insert((f[k], f[(k + 1) % f.len()]), i);
        }
    }
    let nb = faces
        .iter()
        .map(|f| {
            (0..f.len())
                .map(|k| face_of[&(f[(k + 1) % f.len()], f[k])])
                .collect()
        })
        .collect();
    RotationSystem::new(nb)
}

/// Traces every face and checks Euler's formula for the sphere.
pub fn trace_faces(rot: &RotationSystem) -> Result<FaceSet, GraphError> {
    let faces = rot.faces();
    let chi = rot.order() as i64 - rot.size() as i64 + faces.len() as i64;
    if chi != 2 || !rot.is_connected() {
        return Err(GraphError::EulerViolation(chi));
    }
    Ok(FaceSet { faces })
}

/// True iff the graph has at least 4 vertices, is connected, and no set of
/// at most two vertices disconnects it.
pub fn is_three_connected(rot: &RotationSystem) -> bool {
    let n = rot.order();
    if n < 4 || !rot.is_connected() {
        return false;
    }
    (0..n).all(|a| is_biconnected_without(rot, a))
}

/// Whether the graph minus `removed` is connected with no cut vertex
/// (iterative lowpoint search).
fn is_biconnected_without(rot: &RotationSystem, removed: usize) -> bool {
    let n = rot.order();
    let root = if removed == 0 { 1 } else { 0 };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    disc[removed] = 0;
    low[removed] = 0;
    let mut time = 1;
    let mut visited = 1;
    let mut root_children = 0;
    disc[root] = time;
    low[root] = time;
    // (vertex, parent, next neighbor index)
    let mut stack = vec![(root, usize::MAX, 0)];
    while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
        let nb = rot.neighbors(v);
        if *i < nb.len() {
            let w = nb[*i];
            *i += 1;
            if w == removed || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                time += 1;
                visited += 1;
                disc[w] = time;
                low[w] = time;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    visited == n - 1 && root_children <= 1
}

/// An edge cut separating two vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: Vec<(usize, usize)>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// Searches for an edge cut with fewer than `k` edges whose two sides both
/// contain a cycle. Every cycle of a plane graph bounds a face on each
/// side, so it suffices to separate vertex-disjoint face pairs; each pair
/// is contracted and checked with a unit-capacity max-flow capped at `k`.
pub fn cyclic_edge_cut_below(rot: &RotationSystem, k: usize) -> Option<EdgeCut> {
    let faces = rot.faces();
    let edges = rot.edges();
    let n = rot.order();
    let mut edge_id = std::collections::HashMap::with_capacity(edges.len());
    for (i, &e) in edges.iter().enumerate() {
        edge_id.insert(e, i);
    }
    let masks: Vec<Vec<bool>> = faces
        .iter()
        .map(|f| {
            let mut m = vec![false; n];
            for &v in f {
                m[v] = true;
            }
            m
        })
        .collect();
    for a in 0..faces.len() {
        for b in a + 1..faces.len() {
            if faces[b].iter().any(|&v| masks[a][v]) {
                continue;
            }
            if let Some(cut) = min_cut_below(rot, &edges, &edge_id, &masks[a], &masks[b], k) {
                return Some(cut);
            }
        }
    }
    None
}

/// True iff no edge cut of size `< k` separates two cycles.
pub fn cyclic_edge_connectivity_at_least(rot: &RotationSystem, k: usize) -> bool {
    cyclic_edge_cut_below(rot, k).is_none()
}

/// Cyclic edge connectivity, or `None` if no cyclic edge cut with at most
/// `max` edges exists.
pub fn cyclic_edge_connectivity(rot: &RotationSystem, max: usize) -> Option<usize> {
    (1..=max).find(|&k| cyclic_edge_cut_below(rot, k + 1).is_some())
}

fn min_cut_below(
    rot: &RotationSystem,
    edges: &[(usize, usize)],
    edge_id: &std::collections::HashMap<(usize, usize), usize>,
    source: &[bool],
    sink: &[bool],
    k: usize,
) -> Option<EdgeCut> {
    let n = rot.order();
    // flow[e] > 0 means one unit from edges[e].0 to edges[e].1
    let mut flow = vec![0i8; edges.len()];
    let residual = |flow: &[i8], u: usize, v: usize| -> bool {
        let (key, sign) = if u < v { ((u, v), 1) } else { ((v, u), -1) };
        flow[edge_id[&key]] * sign < 1
    };
    let mut total = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        let mut seen = source.to_vec();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| source[v]).collect();
        let mut hit = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &v in rot.neighbors(u) {
                if !seen[v] && residual(&flow, u, v) {
                    seen[v] = true;
                    parent[v] = u;
                    if sink[v] {
                        hit = Some(v);
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        match hit {
            Some(mut v) => {
                while !source[v] {
                    let u = parent[v];
                    if u < v {
                        flow[edge_id[&(u, v)]] += 1;
                    } else {
                        flow[edge_id[&(v, u)]] -= 1;
                    }
                    v = u;
                }
                total += 1;
                if total >= k {
                    return None;
                }
            }
            None => {
                let side_a: Vec<usize> = (0..n).filter(|&v| seen[v]).collect();
                let side_b: Vec<usize> = (0..n).filter(|&v| !seen[v]).collect();
                let cut = edges
                    .iter()
                    .copied()
                    .filter(|&(u, v)| seen[u] != seen[v])
                    .collect();
                return Some(EdgeCut {
                    edges: cut,
                    side_a,
                    side_b,
                });
            }
        }
    }
}

/// A subgraph with inherited cyclic order and a map back to host ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub rot: RotationSystem,
    /// `original[i]` is the host vertex of subgraph vertex `i`.
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn local(&self, host: usize) -> Option<usize> {
        self.original.binary_search(&host).ok()
    }

    /// Faces of the subgraph, reported in host vertex ids.
    pub fn host_faces(&self) -> Vec<Vec<usize>> {
        self.rot
            .faces()
            .into_iter()
            .map(|f| f.into_iter().map(|v| self.original[v]).collect())
            .collect()
    }

    /// Degree of a host vertex inside the subgraph.
    pub fn host_degree(&self, host: usize) -> usize {
        self.local(host).map_or(0, |v| self.rot.degree(v))
    }
}

/// Restricts `rot` to `vertices`, keeping cyclic order among survivors.
pub fn induced_subgraph(rot: &RotationSystem, vertices: &[usize]) -> Subgraph {
    let mut original = vertices.to_vec();
    original.sort_unstable();
    original.dedup();
    let mut index = vec![usize::MAX; rot.order()];
    for (i, &v) in original.iter().enumerate() {
        index[v] = i;
    }
    let neighbors = original
        .iter()
        .map(|&v| {
            rot.neighbors(v)
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect()
        })
        .collect();
    Subgraph {
        rot: RotationSystem { neighbors },
        original,
    }
}

/// Subgraph on `vertices` keeping only the listed host edges.
pub fn edge_subgraph(
    rot: &RotationSystem,
    vertices: &[usize],
    keep: impl Fn(usize, usize) -> bool,
) -> Subgraph {
    let mut sub = induced_subgraph(rot, vertices);
    let original = sub.original.clone();
    let neighbors = (0..original.len())
        .map(|i| {
            sub.rot.neighbors[i]
                .iter()
                .copied()
                .filter(|&j| keep(original[i], original[j]))
                .collect()
        })
        .collect();
    sub.rot = RotationSystem { neighbors };
    sub
}

/// Writes the adjacency text format: `n`, then `v: a b c` per vertex.
impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order())?;
        for (v, l) in self.neighbors.iter().enumerate() {
            write!(f, "{v}:")?;
            for w in l {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parses the adjacency text format written by `Display`.
pub fn parse_adjacency(text: &str) -> Result<RotationSystem, GraphError> {
    let err = |line: usize, column: usize, message: String| GraphError::Parse {
        line,
        column,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty input".into()))?;
    let n: usize = first.trim().parse().map_err(|_| {
        err(
            first_no + 1,
            1,
            format!("expected vertex count, found `{}`", first.trim()),
        )
    })?;
    let mut neighbors = vec![None; n];
    for (no, line) in lines {
        let line_no = no + 1;
        let colon = line
            .find(':')
            .ok_or_else(|| err(line_no, 1, format!("missing `:` in `{line}`")))?;
        let head = line[..colon].trim();
        let v: usize = head
            .parse()
            .map_err(|_| err(line_no, 1, format!("bad vertex id `{head}`")))?;
        if v >= n {
            return Err(err(line_no, 1, format!("vertex `{v}` out of range")));
        }
        let mut list = Vec::new();
        let mut col = colon + 2;
        for tok in line[colon + 1..].split(' ') {
            if tok.is_empty() {
                col += 1;
                continue;
            }
            let w: usize = tok
                .parse()
                .map_err(|_| err(line_no, col, format!("bad neighbor `{tok}`")))?;
            list.push(w);
            col += tok.len() + 1;
        }
        if neighbors[v].replace(list).is_some() {
            return Err(err(line_no, 1, format!("vertex `{v}` listed twice")));
        }
    }
    let neighbors = neighbors
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| err(0, 0, format!("vertex `{v}` missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    RotationSystem::new(neighbors)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Schlegel diagram of the dodecahedron, rotations read off a planar drawing.
    pub(crate) fn dodecahedron() -> RotationSystem {
        crate::fixtures::dodecahedron()
    }

    fn prism(k: usize) -> RotationSystem {
        // outer k-cycle 0..k, inner k-cycle k..2k
        let mut nb = vec![Vec::new(); 2 * k];
        for i in 0..k {
            let j = (i + 1) % k;
            let p = (i + k - 1) % k;
            nb[i] = vec![j, p, k + i];
            nb[k + i] = vec![k + p, k + j, i];
        }
        RotationSystem::cubic(nb).unwrap()
    }

    #[test]
    fn dodecahedron_faces() {
        let fs = trace_faces(&dodecahedron()).unwrap();
        assert_eq!(fs.sizes(), vec![5; 12]);
    }

    #[test]
    fn prism_faces_and_connectivity() {
        let cube = prism(4);
        let fs = trace_faces(&cube).unwrap();
        assert_eq!(fs.sizes(), vec![4; 6]);
        assert!(is_three_connected(&cube));
        // the 4-cycle cut between the two square caps
        assert!(!cyclic_edge_connectivity_at_least(&cube, 5));
        assert!(cyclic_edge_connectivity_at_least(&cube, 4));
    }

    #[test]
    fn bad_embedding_violates_euler() {
        // K4 with one rotation flipped is a torus-like map
        let mut nb = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        let ok = RotationSystem::cubic(nb.clone()).unwrap();
        assert!(trace_faces(&ok).is_ok());
        nb[0] = vec![1, 3, 2];
        let bad = RotationSystem::cubic(nb).unwrap();
        assert!(matches!(
            trace_faces(&bad),
            Err(GraphError::EulerViolation(_))
        ));
    }

    fn three_connected_brute_force(rot: &RotationSystem) -> bool {
        let n = rot.order();
        let ok = |removed: &[usize]| {
            let start = (0..n).find(|v| !removed.contains(v)).unwrap();
            reachable(rot, start, removed)
                .iter()
                .enumerate()
                .all(|(v, &r)| r || removed.contains(&v))
        };
        n >= 4 && (0..n).all(|a| ok(&[a]) && (a + 1..n).all(|b| ok(&[a, b])))
    }

    #[test]
    fn three_connectivity_matches_brute_force() {
        let c60 = crate::fixtures::ih_c60();
        assert!(is_three_connected(&c60) && three_connected_brute_force(&c60));
        // a ladder closed into a ring with one rung removed has a 2-cut
        let mut nb = vec![Vec::new(); 12];
        for i in 0..6 {
            let j = (i + 1) % 6;
            nb[i].push(j);
            nb[j].push(i);
            nb[6 + i].push(6 + j);
            nb[6 + j].push(6 + i);
            if i != 0 {
                nb[i].push(6 + i);
                nb[6 + i].push(i);
            }
        }
        let g = RotationSystem::new(nb).unwrap();
        assert_eq!(is_three_connected(&g), three_connected_brute_force(&g));
        assert!(!is_three_connected(&g));
    }

    #[test]
    fn disjoint_union_is_not_three_connected() {
        let k4 = [vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        let mut nb: Vec<Vec<usize>> = k4.to_vec();
        nb.extend(
            k4.iter()
                .map(|l| l.iter().map(|v| v + 4).collect::<Vec<_>>()),
        );
        let g = RotationSystem::cubic(nb).unwrap();
        assert!(!is_three_connected(&g));
        assert!(trace_faces(&g).is_err());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            RotationSystem::new(vec![vec![0]]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            RotationSystem::new(vec![vec![1], vec![]]),
            Err(GraphError::Asymmetric(0, 1))
        );
        assert!(matches!(
            RotationSystem::cubic(vec![vec![1], vec![0]]),
            Err(GraphError::NotCubic {
                vertex: 0,
                degree: 1
            })
        ));
    }

    #[test]
    fn induced_subgraph_basics() {
        let d = dodecahedron();
        let all: Vec<usize> = (0..20).collect();
        assert_eq!(induced_subgraph(&d, &all).rot, d);
        let face = &trace_faces(&d).unwrap().faces[0];
        let sub = induced_subgraph(&d, face);
        assert_eq!(sub.rot.order(), 5);
        assert!((0..5).all(|v| sub.rot.degree(v) == 2));
    }

    #[test]
    fn dodecahedron_cyclic_connectivity_brute_force() {
        // exhaustive oracle: no edge set of size <= 4 leaves two components
        // that both contain a cycle
        let d = dodecahedron();
        let edges = d.edges();
        let m = edges.len();
        let has_cyclic_split = |removed: &[usize]| -> bool {
            let mut nb = vec![Vec::new(); 20];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if !removed.contains(&i) {
                    nb[u].push(v);
                    nb[v].push(u);
                }
            }
            let mut comp = [usize::MAX; 20];
            let mut cyclic = Vec::new();
            for s in 0..20 {
                if comp[s] != usize::MAX {
                    continue;
                }
                let c = cyclic.len();
                let (mut vs, mut deg_sum) = (0usize, 0usize);
                let mut stack = vec![s];
                comp[s] = c;
                while let Some(v) = stack.pop() {
                    vs += 1;
                    deg_sum += nb[v].len();
                    for &w in &nb[v] {
                        if comp[w] == usize::MAX {
                            comp[w] = c;
                            stack.push(w);
                        }
                    }
                }
                cyclic.push(deg_sum / 2 >= vs);
            }
            cyclic.iter().filter(|&&c| c).count() >= 2
        };
        fn subsets(
            m: usize,
            k: usize,
            start: usize,
            cur: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for i in start..m {
                cur.push(i);
                subsets(m, k, i + 1, cur, f);
                cur.pop();
            }
        }
        let mut found = false;
        for k in 1..=4 {
            subsets(m, k, 0, &mut Vec::new(), &mut |s| {
                found |= has_cyclic_split(s)
            });
        }
        assert!(!found);
        assert!(cyclic_edge_connectivity_at_least(&d, 5));
        assert!(!cyclic_edge_connectivity_at_least(&d, 6));
    }

    #[test]
    fn adjacency_roundtrip_and_errors() {
        let d = dodecahedron();
        let text = d.to_string();
        assert_eq!(parse_adjacency(&text).unwrap(), d);
        let bad = "3\n0: 1 x\n";
        match parse_adjacency(bad) {
            Err(GraphError::Parse { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains("`x`"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
