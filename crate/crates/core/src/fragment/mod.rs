//! Pentagonal fragments, territories, hexagon and Clar extensions, rings and
//! inner duals.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::fullerene::Fullerene;
use crate::matching::{bits, has_perfect_matching};
use crate::Mask;

mod labeling;
mod template;
mod theorem;

pub use labeling::{
    boundary_labeling, face_labelings, induced_extension, labeling_of_cycle, BoundaryLabeling,
};
pub use template::{
    catalogue, classify_fragment, paste, FragmentClass, FragmentTag, Side, Template,
};
pub use theorem::{
    b1_pairs, census_signature, lemma22_forest, theorem2_classify, CensusClass, Theorem2Report,
    TreeShape,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FragmentError {
    #[error("fragment is not maximal: pentagon {0} adjoins it")]
    NotMaximal(usize),
    #[error("boundary has no 2-degree vertex")]
    NoTwoDegreeVertices,
    #[error("faces do not form a single connected region")]
    Disconnected,
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("the extremality criterion needs n >= 60, got {0}")]
    WrongOrder(usize),
    #[error("cannot paste: {0}")]
    IncompatibleOrientation(String),
}

/// A connected set of faces of a host fullerene together with its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    faces: Vec<usize>,
    /// Boundary cycles, each traversed with the fragment on the left.
    boundaries: Vec<Vec<usize>>,
    /// Boundary vertices of degree 2 in the fragment, sorted.
    w: Vec<usize>,
    vertices: Mask,
    pentagons: usize,
}

impl Fragment {
    pub fn from_faces(f: &Fullerene, faces: &[usize]) -> Result<Self, FragmentError> {
        let set: BTreeSet<usize> = faces.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&g| g >= f.face_count()) {
            return Err(FragmentError::NoSuchFace(bad));
        }
        let faces: Vec<usize> = set.iter().copied().collect();
        if !faces_connected(f, &faces) {
            return Err(FragmentError::Disconnected);
        }
        let inside = |g: usize| set.contains(&g);
        let mut next = vec![usize::MAX; f.order()];
        for &g in &faces {
            for (k, (u, v)) in f.face_edges(g).into_iter().enumerate() {
                if !inside(f.face_neighbors(g)[k]) {
                    next[u] = v;
                }
            }
        }
        let mut seen = vec![false; f.order()];
        let mut boundaries = Vec::new();
        for start in 0..f.order() {
            if next[start] == usize::MAX || seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = next[v];
            }
            boundaries.push(cycle);
        }
        let vertices = faces.iter().fold(0, |m, &g| m | f.face_mask(g));
        let w = bits(vertices)
            .filter(|&v| f.vertex_faces(v).iter().filter(|&&g| inside(g)).count() == 1)
            .collect();
        let pentagons = faces.iter().filter(|&&g| f.is_pentagon(g)).count();
        Ok(Fragment {
            faces,
            boundaries,
            w,
            vertices,
            pentagons,
        })
    }

    /// Sorted face ids.
    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn contains_face(&self, g: usize) -> bool {
        self.faces.binary_search(&g).is_ok()
    }

    /// The boundary cycle of a simply connected fragment (empty for the whole
    /// sphere); for fragments with holes, the first of several cycles.
    pub fn boundary(&self) -> &[usize] {
        self.boundaries.first().map_or(&[], |c| c.as_slice())
    }

    pub fn boundaries(&self) -> &[Vec<usize>] {
        &self.boundaries
    }

    /// At most one boundary cycle, i.e. a cycle together with its interior.
    pub fn is_simply_connected(&self) -> bool {
        self.boundaries.len() <= 1
    }

    /// 2-degree boundary vertices, sorted.
    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn vertex_mask(&self) -> Mask {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn pentagon_count(&self) -> usize {
        self.pentagons
    }

    /// Faces outside the fragment sharing an edge with it, sorted.
    pub fn adjoining_faces(&self, f: &Fullerene) -> Vec<usize> {
        let out: BTreeSet<usize> = self
            .faces
            .iter()
            .flat_map(|&g| f.face_neighbors(g).iter().copied())
            .filter(|&g| !self.contains_face(g))
            .collect();
        out.into_iter().collect()
    }

    /// Edges lying on at least one face of the fragment.
    pub fn edges(&self, f: &Fullerene) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|&g| f.face_edges(g))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        set.into_iter().collect()
    }

    /// Adjacency masks of the fragment's own edges, indexed by host vertex.
    pub fn adjacency(&self, f: &Fullerene) -> Vec<Mask> {
        let mut adj = vec![0; f.order()];
        for (u, v) in self.edges(f) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

fn faces_connected(f: &Fullerene, faces: &[usize]) -> bool {
    let Some(&first) = faces.first() else {
        return false;
    };
    let set: HashSet<usize> = faces.iter().copied().collect();
    let mut seen = HashSet::from([first]);
    let mut stack = vec![first];
    while let Some(g) = stack.pop() {
        for &h in f.face_neighbors(g) {
            if set.contains(&h) && seen.insert(h) {
                stack.push(h);
            }
        }
    }
    seen.len() == set.len()
}

/// Connected components of pentagon adjacency, sorted by smallest face id.
/// Isolated pentagons come out as single-face fragments.
pub fn pentagon_components(f: &Fullerene) -> Vec<Fragment> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &p in f.pentagons() {
        if !seen.insert(p) {
            continue;
        }
        let mut comp = vec![p];
        let mut stack = vec![p];
        while let Some(g) = stack.pop() {
            for &h in f.face_neighbors(g) {
                if f.is_pentagon(h) && seen.insert(h) {
                    comp.push(h);
                    stack.push(h);
                }
            }
        }
        out.push(Fragment::from_faces(f, &comp).expect("components are connected"));
    }
    out
}

/// `g` together with every face sharing an edge with it.
pub fn territory(f: &Fullerene, g: &Fragment) -> Fragment {
    let mut faces = g.faces.clone();
    faces.extend(g.adjoining_faces(f));
    Fragment::from_faces(f, &faces).expect("a territory is connected")
}

/// The territory, provided every adjoining face is a hexagon.
pub fn hexagon_extension(f: &Fullerene, g: &Fragment) -> Option<Fragment> {
    g.adjoining_faces(f)
        .iter()
        .all(|&h| !f.is_pentagon(h))
        .then(|| territory(f, g))
}

/// A Clar set of a hexagon extension: disjoint hexagons leaving the fewest
/// fragment vertices uncovered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClarSet {
    /// Sorted face ids.
    pub hexagons: Vec<usize>,
    /// Fragment vertices outside every chosen hexagon, sorted.
    pub uncovered: Vec<usize>,
    /// The uncovered vertices have a perfect matching in the fragment.
    pub normal: bool,
}

/// Whether the graph on `avail` has a matching saturating `required`.
pub(crate) fn has_covering_matching(adj: &[Mask], avail: Mask, required: Mask) -> bool {
    fn go(adj: &[Mask], avail: Mask, required: Mask, failed: &mut HashSet<Mask>) -> bool {
        let req = avail & required;
        if req == 0 {
            return true;
        }
        if failed.contains(&avail) {
            return false;
        }
        let r = bits(req)
            .min_by_key(|&r| (adj[r] & avail).count_ones())
            .unwrap();
        let rest = avail & !(1 << r);
        for w in bits(adj[r] & rest) {
            if go(adj, rest & !(1 << w), required, failed) {
                return true;
            }
        }
        failed.insert(avail);
        false
    }
    go(adj, avail, required, &mut HashSet::new())
}

/// Hexagons of `H[G]` in sorted order, or the first adjoining pentagon.
fn extension_hexagons(f: &Fullerene, g: &Fragment) -> Result<Vec<usize>, FragmentError> {
    let adjoining = g.adjoining_faces(f);
    if let Some(&p) = adjoining.iter().find(|&&h| f.is_pentagon(h)) {
        return Err(FragmentError::NotMaximal(p));
    }
    let mut hex: Vec<usize> = g
        .faces
        .iter()
        .copied()
        .filter(|&h| !f.is_pentagon(h))
        .collect();
    hex.extend(adjoining);
    hex.sort_unstable();
    Ok(hex)
}

/// Every set of pairwise disjoint faces from `candidates`, as index lists.
fn disjoint_subsets(f: &Fullerene, candidates: &[usize], mut visit: impl FnMut(&[usize], Mask)) {
    fn go(
        f: &Fullerene,
        candidates: &[usize],
        from: usize,
        used: Mask,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], Mask),
    ) {
        visit(chosen, used);
        for i in from..candidates.len() {
            let m = f.face_mask(candidates[i]);
            if m & used == 0 {
                chosen.push(candidates[i]);
                go(f, candidates, i + 1, used | m, chosen, visit);
                chosen.pop();
            }
        }
    }
    go(f, candidates, 0, 0, &mut Vec::new(), &mut visit);
}

/// Exhaustive Clar set of the hexagon extension of `g`. Among sets with the
/// fewest uncovered vertices a normal one is preferred, then the
/// lexicographically least.
pub fn clar_set(f: &Fullerene, g: &Fragment) -> Result<ClarSet, FragmentError> {
    let hex = extension_hexagons(f, g)?;
    let adj = g.adjacency(f);
    let w_mask = g.w.iter().fold(0 as Mask, |m, &v| m | (1 << v));
    let mut best: Option<(usize, bool, Vec<usize>)> = None;
    disjoint_subsets(f, &hex, |chosen, used| {
        let u = g.vertices & !used;
        let size = u.count_ones() as usize;
        if best.as_ref().is_some_and(|b| (b.0, !b.1) < (size, false)) {
            return;
        }
        if !has_covering_matching(&adj, u, !w_mask) {
            return;
        }
        let normal = has_perfect_matching(&adj, u);
        let mut h = chosen.to_vec();
        h.sort_unstable();
        let key = (size, !normal, h);
        if best.as_ref().is_none_or(|b| key < (b.0, !b.1, b.2.clone())) {
            best = Some((key.0, normal, key.2));
        }
    });
    let (_, normal, hexagons) = best.expect("the empty set always qualifies");
    let used = hexagons.iter().fold(0 as Mask, |m, &h| m | f.face_mask(h));
    Ok(ClarSet {
        hexagons,
        uncovered: bits(g.vertices & !used).collect(),
        normal,
    })
}

/// Whether `g` leaves exactly one vertex per pentagon uncovered.
pub fn is_extremal_fragment(f: &Fullerene, g: &Fragment) -> Result<bool, FragmentError> {
    Ok(clar_set(f, g)?.uncovered.len() == g.pentagons)
}

/// Pentagon adjacency inside a fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDual {
    /// Pentagon face ids, sorted.
    pub nodes: Vec<usize>,
    /// Pairs of adjacent pentagons, each as `(smaller, larger)`.
    pub edges: Vec<(usize, usize)>,
    /// Minimum degree; 0 for a single pentagon or an empty dual.
    pub min_degree: usize,
}

pub fn inner_dual(f: &Fullerene, g: &Fragment) -> InnerDual {
    let nodes: Vec<usize> = g
        .faces
        .iter()
        .copied()
        .filter(|&p| f.is_pentagon(p))
        .collect();
    let mut edges = Vec::new();
    let mut min_degree = usize::MAX;
    for &p in &nodes {
        let nb: Vec<usize> = f
            .face_neighbors(p)
            .iter()
            .copied()
            .filter(|&q| f.is_pentagon(q) && g.contains_face(q))
            .collect();
        min_degree = min_degree.min(nb.len());
        edges.extend(nb.into_iter().filter(|&q| p < q).map(|q| (p, q)));
    }
    edges.sort_unstable();
    InnerDual {
        nodes,
        edges,
        min_degree: if min_degree == usize::MAX {
            0
        } else {
            min_degree
        },
    }
}

/// Minimum number of pentagons of `g` adjoining a common pentagon of `g`.
pub fn gamma(f: &Fullerene, g: &Fragment) -> usize {
    inner_dual(f, g).min_degree
}

/// Pentagons `P_0 .. P_{k-1}` where `P_i` and `P_j` meet exactly when
/// `i` and `j` are cyclically consecutive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PentagonalRing {
    pub pentagons: Vec<usize>,
}

impl PentagonalRing {
    pub fn k(&self) -> usize {
        self.pentagons.len()
    }
}

/// Rings with 5 to 12 pentagons, each reported once: rotated to start at its
/// smallest face and read in the direction with the smaller second face.
pub fn detect_pentagonal_rings(f: &Fullerene) -> Vec<PentagonalRing> {
    let pent = f.pentagons();
    let adjacent = |a: usize, b: usize| f.faces_adjacent(a, b);
    let mut rings = BTreeSet::new();
    fn extend(
        path: &mut Vec<usize>,
        pent: &[usize],
        adjacent: &dyn Fn(usize, usize) -> bool,
        rings: &mut BTreeSet<Vec<usize>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &q in pent {
            if q <= start || path.contains(&q) || !adjacent(last, q) {
                continue;
            }
            // chordless: q may touch only its predecessor, and the start
            // only when it closes the ring
            let inner = path.len().saturating_sub(2);
            if path.iter().skip(1).take(inner).any(|&x| adjacent(x, q)) {
                continue;
            }
            path.push(q);
            if path.len() > 2 && adjacent(start, q) {
                if path.len() >= 5 {
                    rings.insert(path.clone());
                }
            } else if path.len() < 12 {
                extend(path, pent, adjacent, rings);
            }
            path.pop();
        }
    }
    for &s in pent {
        let mut path = vec![s];
        extend(&mut path, pent, &adjacent, &mut rings);
    }
    rings
        .into_iter()
        .filter(|c| c[1] < c[c.len() - 1])
        .map(|pentagons| PentagonalRing { pentagons })
        .collect()
}

/// Edges of `g` on the boundary of its Clar extension whose ends are both
/// covered by the Clar set, each as `(smaller, larger)`.
pub fn pasting_edges(f: &Fullerene, g: &Fragment, cs: &ClarSet) -> Vec<(usize, usize)> {
    let mut faces = g.faces.clone();
    faces.extend(&cs.hexagons);
    let ext = Fragment::from_faces(f, &faces).expect("a Clar extension is connected");
    let covered = cs
        .hexagons
        .iter()
        .fold(0 as Mask, |m, &h| m | f.face_mask(h));
    let own: HashSet<(usize, usize)> = g.edges(f).into_iter().collect();
    let mut out: Vec<(usize, usize)> = ext
        .boundaries
        .iter()
        .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .filter(|&(u, v)| own.contains(&(u, v)) && covered >> u & 1 == 1 && covered >> v & 1 == 1)
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::fullerene::validate;
    use crate::spiral::{from_pentagon_positions, from_spiral};

    fn c60() -> Fullerene {
        validate(&fixtures::ih_c60()).unwrap()
    }

    fn extremal(index: usize) -> Fullerene {
        let (_, pos) = fixtures::EXTREMAL_C60
            .iter()
            .find(|(i, _)| *i == index)
            .unwrap();
        from_spiral(&from_pentagon_positions(60, pos)).unwrap()
    }

    #[test]
    fn isolated_pentagons_are_single_components() {
        let c = c60();
        let comps = pentagon_components(&c);
        assert_eq!(comps.len(), 12);
        for g in &comps {
            assert_eq!(g.faces().len(), 1);
            assert_eq!(g.w().len(), 5);
            assert!(g.is_simply_connected());
            let t = territory(&c, g);
            assert_eq!(t.vertex_count(), 20);
            assert_eq!(hexagon_extension(&c, g), Some(t));
            let cs = clar_set(&c, g).unwrap();
            assert_eq!(cs.uncovered.len(), 1);
            assert!(is_extremal_fragment(&c, g).unwrap());
            assert_eq!(gamma(&c, g), 0);
        }
        assert!(detect_pentagonal_rings(&c).is_empty());
    }

    #[test]
    fn dodecahedron_is_one_component() {
        let d = validate(&fixtures::dodecahedron()).unwrap();
        let comps = pentagon_components(&d);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].faces().len(), 12);
        assert!(comps[0].boundary().is_empty());
        assert!(comps[0].w().is_empty());
        assert_eq!(gamma(&d, &comps[0]), 5);
    }

    #[test]
    fn rings_around_a_dodecahedron_face() {
        let d = validate(&fixtures::dodecahedron()).unwrap();
        let rings = detect_pentagonal_rings(&d);
        for p in 0..12 {
            let mut around = d.face_neighbors(p).to_vec();
            around.sort_unstable();
            assert!(rings.iter().any(|r| {
                let mut s = r.pentagons.clone();
                s.sort_unstable();
                s == around
            }));
        }
        assert!(rings.iter().all(|r| (5..=12).contains(&r.k())));
        // the closed ring with its centre, and with one ring face missing
        let nb = d.face_neighbors(0);
        let full: Vec<usize> = std::iter::once(0).chain(nb.iter().copied()).collect();
        let r5 = Fragment::from_faces(&d, &full).unwrap();
        assert_eq!(gamma(&d, &r5), 3);
        let r5_minus = Fragment::from_faces(&d, &full[..5]).unwrap();
        assert_eq!(gamma(&d, &r5_minus), 2);
    }

    #[test]
    fn fragments_reject_bad_face_sets() {
        let c = c60();
        assert_eq!(
            Fragment::from_faces(&c, &[99]),
            Err(FragmentError::NoSuchFace(99))
        );
        let p = c.pentagons();
        assert_eq!(
            Fragment::from_faces(&c, &[p[0], p[1]]),
            Err(FragmentError::Disconnected)
        );
        let d = validate(&fixtures::dodecahedron()).unwrap();
        let one = Fragment::from_faces(&d, &[0]).unwrap();
        assert!(matches!(
            clar_set(&d, &one),
            Err(FragmentError::NotMaximal(_))
        ));
        assert_eq!(hexagon_extension(&d, &one), None);
    }

    #[test]
    fn b3_has_a_normal_clar_set() {
        let f = extremal(43);
        let comps = pentagon_components(&f);
        assert_eq!(comps.len(), 2);
        for g in &comps {
            assert_eq!(g.pentagon_count(), 6);
            assert_eq!(g.vertex_count(), 18);
            let cs = clar_set(&f, g).unwrap();
            assert_eq!(cs.uncovered.len(), 6);
            assert!(cs.normal);
            assert_eq!(pasting_edges(&f, g, &cs).len(), 2);
        }
    }

    #[test]
    fn covering_matching_on_a_path() {
        // path 0-1-2
        let adj: Vec<Mask> = vec![0b010, 0b101, 0b010];
        assert!(has_covering_matching(&adj, 0b111, 0b001));
        assert!(!has_covering_matching(&adj, 0b111, 0b101));
        assert!(has_covering_matching(&adj, 0b111, 0));
    }
}
