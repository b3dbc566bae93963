//! Fragment-based extremality criterion and the supporting structural
//! checks.

use serde::Serialize;

use super::{
    classify_fragment, pentagon_components, Fragment, FragmentClass, FragmentError, FragmentTag,
};
use crate::fullerene::Fullerene;
use crate::matching::{bits, full_mask, has_perfect_matching, Matching};
use crate::Mask;

/// Pentagon pairs `(p, q)`, `p < q`, joined by an edge of `witness` that
/// avoids the chosen `hexagons` and lies on no pentagon, with `p` and `q`
/// the faces the edge touches at its two ends.
pub fn b1_pairs(f: &Fullerene, hexagons: &[usize], witness: &Matching) -> Vec<(usize, usize)> {
    let covered = hexagons.iter().fold(0 as Mask, |m, &h| m | f.face_mask(h));
    let mut pairs = Vec::new();
    for &(u, v) in witness.edges() {
        if covered >> u & 1 == 1 || covered >> v & 1 == 1 {
            continue;
        }
        let e = f.edge_id(u, v).expect("matching edges are graph edges");
        let sides = f.edge_faces(e);
        if sides.iter().any(|&g| f.is_pentagon(g)) {
            continue;
        }
        let touch = |x: usize| {
            f.vertex_faces(x)
                .into_iter()
                .find(|g| !sides.contains(g))
                .expect("three faces meet at a vertex")
        };
        let (p, q) = (touch(u), touch(v));
        if f.is_pentagon(p) && f.is_pentagon(q) {
            pairs.push((p.min(q), p.max(q)));
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Shape of `F - (V(B) \ W)` for a fragment with one to four 2-degree
/// boundary vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TreeShape {
    K2,
    K13,
    TwoK2,
    /// Path with three edges.
    P4,
    /// Two adjacent vertices of degree 3, each carrying two leaves.
    T0,
    /// Anything else, including graphs with cycles.
    Other,
}

/// `None` unless `0 < |W| <= 4`.
pub fn lemma22_forest(f: &Fullerene, g: &Fragment) -> Option<TreeShape> {
    let w = g.w();
    if w.is_empty() || w.len() > 4 {
        return None;
    }
    let keep =
        (full_mask(f.order()) & !g.vertex_mask()) | w.iter().fold(0 as Mask, |m, &v| m | (1 << v));
    let adj = f.adjacency_masks();
    let vertices: Vec<usize> = bits(keep).collect();
    let degree = |v: usize| (adj[v] & keep).count_ones() as usize;
    let edges: usize = vertices.iter().map(|&v| degree(v)).sum::<usize>() / 2;
    let components = {
        let mut seen: Mask = 0;
        let mut count = 0;
        for &v in &vertices {
            if seen >> v & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier: Mask = 1 << v;
            while frontier != 0 {
                seen |= frontier;
                frontier = bits(frontier).fold(0, |m, x| m | adj[x]) & keep & !seen;
            }
        }
        count
    };
    if edges + components != vertices.len() {
        return Some(TreeShape::Other);
    }
    let mut degrees: Vec<usize> = vertices.iter().map(|&v| degree(v)).collect();
    degrees.sort_unstable();
    let shape = match (components, degrees.as_slice()) {
        (1, [1, 1]) => TreeShape::K2,
        (1, [1, 1, 1, 3]) => TreeShape::K13,
        (2, [1, 1, 1, 1]) => TreeShape::TwoK2,
        (1, [1, 1, 2, 2]) => TreeShape::P4,
        (1, [1, 1, 1, 1, 3, 3]) => TreeShape::T0,
        _ => TreeShape::Other,
    };
    Some(shape)
}

/// Census classes of extremal 60-vertex fullerenes, by the composite
/// units their pentagon components form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CensusClass {
    /// Contains `B3`.
    B3,
    /// Contains `P2`, i.e. two `B1` units pasted together.
    B1Power,
    /// Contains `P*B2` or `P*B2*P` but no `P2`.
    B2B1,
    /// Only single pentagons and `B2`.
    Units,
    /// Some component is outside the catalogue.
    Other,
}

impl std::fmt::Display for CensusClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CensusClass::B3 => "B3",
            CensusClass::B1Power => "B1^k",
            CensusClass::B2B1 => "B2*B1",
            CensusClass::Units => "B1/B2",
            CensusClass::Other => "other",
        })
    }
}

pub fn census_signature(tags: &[FragmentTag]) -> CensusClass {
    let has = |t: FragmentTag| tags.contains(&t);
    if has(FragmentTag::Other) {
        CensusClass::Other
    } else if has(FragmentTag::B3) {
        CensusClass::B3
    } else if has(FragmentTag::P2) {
        CensusClass::B1Power
    } else if has(FragmentTag::PB2) || has(FragmentTag::PB2P) {
        CensusClass::B2B1
    } else {
        CensusClass::Units
    }
}

#[derive(Debug, Clone)]
pub struct Theorem2Report {
    pub components: Vec<(Fragment, FragmentClass)>,
    /// Every component is in the catalogue.
    pub catalogued: bool,
    /// The union of the components has a normal Clar set leaving one
    /// vertex per pentagon uncovered.
    pub normal_clar_set: bool,
    /// Some such Clar set leaves a complement tiled by disjoint hexagons.
    pub complement_tiled: bool,
    /// Hexagons of the joint Clar set, then of the complement tiling, when
    /// both exist.
    pub clar_set: Option<Vec<usize>>,
    pub complement: Option<Vec<usize>>,
    pub extremal: bool,
}

impl Theorem2Report {
    pub fn tags(&self) -> Vec<FragmentTag> {
        self.components.iter().map(|(_, c)| c.tag).collect()
    }

    pub fn census_class(&self) -> CensusClass {
        census_signature(&self.tags())
    }
}

struct Cover<'a> {
    f: &'a Fullerene,
    /// Vertices of the pentagon components.
    region: Mask,
    budget: usize,
    found: Vec<Vec<usize>>,
}

impl Cover<'_> {
    /// Decides the lowest undecided region vertex: covered by one of its
    /// hexagons, or left out at the cost of one unit of budget.
    fn search(&mut self, undecided: Mask, used: Mask, left_out: usize, chosen: &mut Vec<usize>) {
        let open = undecided & !used;
        if open == 0 {
            let mut h = chosen.clone();
            h.sort_unstable();
            self.found.push(h);
            return;
        }
        let v = open.trailing_zeros() as usize;
        for g in self.f.vertex_faces(v) {
            let m = self.f.face_mask(g);
            if self.f.is_pentagon(g) || m & used != 0 {
                continue;
            }
            chosen.push(g);
            self.search(undecided, used | m, left_out, chosen);
            chosen.pop();
        }
        if left_out < self.budget {
            self.search(undecided & !(1 << v), used, left_out + 1, chosen);
        }
    }
}

/// Disjoint hexagons covering exactly `rest`, smallest face ids first.
fn tile(f: &Fullerene, rest: Mask) -> Option<Vec<usize>> {
    if rest == 0 {
        return Some(Vec::new());
    }
    let v = rest.trailing_zeros() as usize;
    for g in f.vertex_faces(v) {
        let m = f.face_mask(g);
        if f.is_pentagon(g) || m & !rest != 0 {
            continue;
        }
        if let Some(mut t) = tile(f, rest & !m) {
            t.push(g);
            return Some(t);
        }
    }
    None
}

/// Decides extremality of a fullerene with at least 60 vertices from its
/// pentagonal fragments: all are catalogued, their union has a normal Clar
/// set, and what lies outside the resulting Clar extension is exactly
/// covered by disjoint hexagons.
pub fn theorem2_classify(f: &Fullerene) -> Result<Theorem2Report, FragmentError> {
    if f.order() < 60 {
        return Err(FragmentError::WrongOrder(f.order()));
    }
    let components: Vec<(Fragment, FragmentClass)> = pentagon_components(f)
        .into_iter()
        .map(|g| classify_fragment(f, &g).map(|c| (g, c)))
        .collect::<Result<_, _>>()?;
    let catalogued = components.iter().all(|(_, c)| c.tag != FragmentTag::Other);
    let region = components
        .iter()
        .fold(0 as Mask, |m, (g, _)| m | g.vertex_mask());
    let pentagons = f.pentagons().len();
    let mut cover = Cover {
        f,
        region,
        budget: pentagons,
        found: Vec::new(),
    };
    cover.search(region, 0, 0, &mut Vec::new());
    let mut sets = std::mem::take(&mut cover.found);
    sets.sort();
    sets.dedup();
    let mut normal_clar_set = false;
    let mut witness = None;
    for h in sets {
        let used = h.iter().fold(0 as Mask, |m, &g| m | f.face_mask(g));
        // induced in F: the edge joining the two pentagons of a B1 lies on
        // hexagons of the extension, not on the pentagons themselves
        let uncovered = cover.region & !used;
        if uncovered.count_ones() as usize != pentagons
            || !has_perfect_matching(f.adjacency_masks(), uncovered)
        {
            continue;
        }
        normal_clar_set = true;
        let rest = full_mask(f.order()) & !cover.region & !used;
        if let Some(mut t) = tile(f, rest) {
            t.sort_unstable();
            witness = Some((h, t));
            break;
        }
    }
    let complement_tiled = witness.is_some();
    let (clar_set, complement) = witness.unzip();
    Ok(Theorem2Report {
        extremal: catalogued && complement_tiled,
        components,
        catalogued,
        normal_clar_set,
        complement_tiled,
        clar_set,
        complement,
    })
}
