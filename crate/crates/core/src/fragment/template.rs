//! Abstract fragments described by how the sides of their faces are glued,
//! and the catalogue of extremal pentagonal fragments.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::{clar_set, ClarSet, Fragment, FragmentError};
use crate::fullerene::Fullerene;

/// Side `k` of face `i`, running from corner `k` to corner `k + 1`. All
/// faces are read in the same rotational sense, so glued sides run in
/// opposite directions.
pub type Side = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    sizes: Vec<usize>,
    glue: Vec<Vec<Option<Side>>>,
    pasting: Vec<Side>,
}

impl Template {
    /// Panics on out-of-range or doubly glued sides; templates are built
    /// from fixed tables or from host fragments.
    pub fn new(sizes: Vec<usize>, gluings: &[(Side, Side)], pasting: Vec<Side>) -> Self {
        let mut glue: Vec<Vec<Option<Side>>> = sizes.iter().map(|&s| vec![None; s]).collect();
        for &(a, b) in gluings {
            assert!(
                glue[a.0][a.1].is_none() && glue[b.0][b.1].is_none(),
                "side glued twice"
            );
            glue[a.0][a.1] = Some(b);
            glue[b.0][b.1] = Some(a);
        }
        Template {
            sizes,
            glue,
            pasting,
        }
    }

    pub fn pentagon() -> Self {
        Template::new(vec![5], &[], vec![(0, 0)])
    }

    /// Four pentagons in a zigzag chain `p, p1, p2, f2`.
    pub fn b2() -> Self {
        Template::new(
            vec![5; 4],
            &[((0, 0), (1, 0)), ((1, 3), (2, 0)), ((2, 2), (3, 4))],
            vec![(3, 2), (0, 3)],
        )
    }

    /// Six pentagons `p, p1, p2, f, f2, f4`: two triangles of the inner dual
    /// sharing the edge `p2 f`, with `p` and `f4` hanging off the ends.
    pub fn b3() -> Self {
        Template::new(
            vec![5; 6],
            &[
                ((0, 0), (1, 0)),
                ((1, 2), (3, 4)),
                ((1, 3), (2, 0)),
                ((2, 1), (3, 3)),
                ((2, 2), (4, 4)),
                ((3, 2), (4, 0)),
                ((4, 2), (5, 0)),
            ],
            vec![(0, 3), (5, 3)],
        )
    }

    /// The faces of a host fragment, glued as in the host.
    pub fn from_fragment(f: &Fullerene, g: &Fragment) -> Self {
        let index: HashMap<usize, usize> =
            g.faces().iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let mut gluings = Vec::new();
        for (i, &h) in g.faces().iter().enumerate() {
            for (k, &o) in f.face_neighbors(h).iter().enumerate() {
                if let Some(&j) = index.get(&o) {
                    if i < j {
                        let l = f.face_neighbors(o).iter().position(|&x| x == h).unwrap();
                        gluings.push(((i, k), (j, l)));
                    }
                }
            }
        }
        let sizes = g.faces().iter().map(|&h| f.face(h).len()).collect();
        Template::new(sizes, &gluings, Vec::new())
    }

    pub fn face_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn pasting_edges(&self) -> &[Side] {
        &self.pasting
    }

    fn corner(&self, face: usize, k: usize) -> usize {
        self.sizes[..face].iter().sum::<usize>() + k % self.sizes[face]
    }

    /// Corner-to-vertex map: glued sides identify their end corners.
    fn vertex_of_corner(&self) -> Vec<usize> {
        let total: usize = self.sizes.iter().sum();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for i in 0..self.sizes.len() {
            for k in 0..self.sizes[i] {
                if let Some((j, l)) = self.glue[i][k] {
                    for (a, b) in [
                        (self.corner(i, k), self.corner(j, l + 1)),
                        (self.corner(i, k + 1), self.corner(j, l)),
                    ] {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        parent[ra] = rb;
                    }
                }
            }
        }
        (0..total).map(|c| find(&mut parent, c)).collect()
    }

    /// Vertex count and, per vertex, the number of distinct incident edges.
    pub fn degrees(&self) -> HashMap<usize, usize> {
        let vertex = self.vertex_of_corner();
        let mut edges = BTreeSet::new();
        for i in 0..self.sizes.len() {
            for k in 0..self.sizes[i] {
                let (a, b) = (vertex[self.corner(i, k)], vertex[self.corner(i, k + 1)]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut deg = HashMap::new();
        for (a, b) in edges {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        deg
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees().len()
    }

    /// Every vertex lies on at most three edges.
    pub fn is_cubic_compatible(&self) -> bool {
        self.degrees().values().all(|&d| d <= 3)
    }

    fn side_end_degrees(&self, s: Side) -> [usize; 2] {
        let vertex = self.vertex_of_corner();
        let deg = self.degrees();
        [
            deg[&vertex[self.corner(s.0, s.1)]],
            deg[&vertex[self.corner(s.0, s.1 + 1)]],
        ]
    }

    /// Plane isomorphism, reflections included.
    pub fn is_isomorphic(&self, other: &Template) -> bool {
        let mut a = self.sizes.clone();
        let mut b = other.sizes.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        if self.sizes.is_empty() {
            return true;
        }
        let s0 = self.sizes[0];
        (0..other.sizes.len())
            .filter(|&j| other.sizes[j] == s0)
            .any(|j| {
                (0..s0).any(|l| {
                    [1, -1]
                        .into_iter()
                        .any(|dir| self.maps_onto(other, j, l, dir).is_some())
                })
            })
    }

    /// Every plane isomorphism onto `other`, as the image of each side.
    pub fn isomorphisms(&self, other: &Template) -> Vec<HashMap<Side, Side>> {
        let mut out = Vec::new();
        if self.sizes.is_empty() || self.sizes.len() != other.sizes.len() {
            return out;
        }
        for j in 0..other.sizes.len() {
            for l in 0..other.sizes[j] {
                for dir in [1, -1] {
                    if let Some(image) = self.maps_onto(other, j, l, dir) {
                        let mut map = HashMap::new();
                        for (i, &(fj, off)) in image.iter().enumerate() {
                            let s = self.sizes[i] as i64;
                            for k in 0..self.sizes[i] {
                                let side = (off as i64 + dir * k as i64).rem_euclid(s) as usize;
                                map.insert((i, k), (fj, side));
                            }
                        }
                        out.push(map);
                    }
                }
            }
        }
        out
    }

    /// Tries sending face 0 side 0 to face `j` side `l`, walking sides in
    /// direction `dir`.
    fn maps_onto(
        &self,
        other: &Template,
        j: usize,
        l: usize,
        dir: i64,
    ) -> Option<Vec<(usize, usize)>> {
        let n = self.sizes.len();
        // image face and the image of side 0
        let mut image: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut used = vec![false; n];
        let side = |s: usize, offset: usize, k: usize| -> usize {
            (offset as i64 + dir * k as i64).rem_euclid(s as i64) as usize
        };
        image[0] = Some((j, l));
        used[j] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let (fj, off) = image[i].unwrap();
            let s = self.sizes[i];
            for k in 0..s {
                let mine = self.glue[i][k];
                let theirs = other.glue[fj][side(s, off, k)];
                match (mine, theirs) {
                    (None, None) => {}
                    (Some((i2, k2)), Some((j2, l2))) => {
                        if self.sizes[i2] != other.sizes[j2] {
                            return None;
                        }
                        let s2 = self.sizes[i2] as i64;
                        let off2 = (l2 as i64 - dir * k2 as i64).rem_euclid(s2) as usize;
                        match image[i2] {
                            Some(prev) if prev != (j2, off2) => return None,
                            Some(_) => {}
                            None => {
                                if used[j2] {
                                    return None;
                                }
                                used[j2] = true;
                                image[i2] = Some((j2, off2));
                                stack.push(i2);
                            }
                        }
                    }
                    _ => return None,
                }
            }
        }
        image.into_iter().collect()
    }
}

/// Glues `x` and `y` along pasting edges `ex` of `x` and `ey` of `y`. The
/// remaining pasting edges of both carry over, `y`'s faces renumbered after
/// `x`'s.
pub fn paste(x: &Template, ex: Side, y: &Template, ey: Side) -> Result<Template, FragmentError> {
    if !x.pasting.contains(&ex) || !y.pasting.contains(&ey) {
        return Err(FragmentError::IncompatibleOrientation(
            "side is not a pasting edge".into(),
        ));
    }
    // both ends must still have a free edge on each side, or the union
    // would put four edges on a vertex
    if x.side_end_degrees(ex) != [2, 2] || y.side_end_degrees(ey) != [2, 2] {
        return Err(FragmentError::IncompatibleOrientation(
            "an end of the pasting edge is already saturated".into(),
        ));
    }
    let shift = x.sizes.len();
    let mut sizes = x.sizes.clone();
    sizes.extend(&y.sizes);
    let mut gluings = Vec::new();
    for (t, off) in [(x, 0), (y, shift)] {
        for i in 0..t.sizes.len() {
            for k in 0..t.sizes[i] {
                if let Some((j, l)) = t.glue[i][k] {
                    if (i, k) < (j, l) {
                        gluings.push(((i + off, k), (j + off, l)));
                    }
                }
            }
        }
    }
    gluings.push((ex, (ey.0 + shift, ey.1)));
    let pasting = x
        .pasting
        .iter()
        .filter(|&&s| s != ex)
        .copied()
        .chain(
            y.pasting
                .iter()
                .filter(|&&s| s != ey)
                .map(|&(i, k)| (i + shift, k)),
        )
        .collect();
    let t = Template::new(sizes, &gluings, pasting);
    if !t.is_cubic_compatible() {
        return Err(FragmentError::IncompatibleOrientation(
            "pasted sides overlap".into(),
        ));
    }
    Ok(t)
}

/// Names of the extremal pentagonal fragments, plus `B1` for two single
/// pentagons joined by an edge of the complementary matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FragmentTag {
    P,
    B1,
    B2,
    B3,
    P2,
    #[serde(rename = "P*B2")]
    PB2,
    #[serde(rename = "P*B2*P")]
    PB2P,
    Other,
}

impl fmt::Display for FragmentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FragmentTag::P => "P",
            FragmentTag::B1 => "B1",
            FragmentTag::B2 => "B2",
            FragmentTag::B3 => "B3",
            FragmentTag::P2 => "P2",
            FragmentTag::PB2 => "P*B2",
            FragmentTag::PB2P => "P*B2*P",
            FragmentTag::Other => "Other",
        };
        f.write_str(s)
    }
}

/// `P`, `B2`, `B3`, `P2`, `P*B2`, `P*B2*P`.
pub fn catalogue() -> &'static [(FragmentTag, Template)] {
    static CATALOGUE: OnceLock<Vec<(FragmentTag, Template)>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        let p = Template::pentagon();
        let b2 = Template::b2();
        let p2 = paste(&p, (0, 0), &p, (0, 0)).expect("P*P");
        let pb2 = paste(&b2, (3, 2), &p, (0, 0)).expect("B2*P");
        let pb2p = paste(&pb2, (0, 3), &p, (0, 0)).expect("P*B2*P");
        vec![
            (FragmentTag::P, p),
            (FragmentTag::B2, b2),
            (FragmentTag::B3, Template::b3()),
            (FragmentTag::P2, p2),
            (FragmentTag::PB2, pb2),
            (FragmentTag::PB2P, pb2p),
        ]
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentClass {
    pub tag: FragmentTag,
    pub clar_set: ClarSet,
}

impl FragmentClass {
    pub fn normal(&self) -> bool {
        self.clar_set.normal
    }
}

/// Matches a maximal pentagonal fragment against the catalogue.
pub fn classify_fragment(f: &Fullerene, g: &Fragment) -> Result<FragmentClass, FragmentError> {
    let clar_set = clar_set(f, g)?;
    let tag = if g.is_simply_connected() && g.pentagon_count() == g.faces().len() {
        let t = Template::from_fragment(f, g);
        catalogue()
            .iter()
            .find(|(_, c)| c.is_isomorphic(&t))
            .map_or(FragmentTag::Other, |(tag, _)| *tag)
    } else {
        FragmentTag::Other
    };
    Ok(FragmentClass { tag, clar_set })
}
