//! Perfect matchings: existence (Edmonds' blossom algorithm), exact
//! counting, and Fries structures.
//!
//! Graphs are given as adjacency bitmasks plus a mask of the vertices that
//! take part, so vertex-deleted subgraphs cost nothing to form.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::fullerene::Fullerene;
use crate::Mask;

/// Vertices of a mask in increasing order.
pub fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of pairwise disjoint edges, kept sorted with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching; `None` if two edges share a vertex.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| norm(u, v)).collect();
        edges.sort_unstable();
        let mut seen: Mask = 0;
        for &(u, v) in &edges {
            let m = (1 << u) | (1 << v);
            if u == v || seen & m != 0 {
                return None;
            }
            seen |= m;
        }
        Some(Matching { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm(u, v)).is_ok()
    }

    pub fn covered(&self) -> Mask {
        self.edges
            .iter()
            .fold(0, |m, &(u, v)| m | (1 << u) | (1 << v))
    }

    pub fn is_perfect_on(&self, vertices: Mask) -> bool {
        self.covered() == vertices
    }
}

/// One `u-v` token per line, sorted.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(u, v) in &self.edges {
            writeln!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

/// Maximum matching of the subgraph induced by `vertices`, as a mate array
/// (`usize::MAX` for unmatched vertices).
fn maximum_matching(adj: &[Mask], vertices: Mask) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut mate = vec![NONE; adj.len()];
    // greedy start
    for v in bits(vertices) {
        if mate[v] == NONE {
            if let Some(w) = bits(adj[v] & vertices).find(|&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    extend_matching(adj, vertices, mate)
}

/// Grows `mate` (a matching inside `vertices`) to a maximum matching.
pub(crate) fn extend_matching(adj: &[Mask], vertices: Mask, mut mate: Vec<usize>) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let n = adj.len();
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];
    let lca = |mate: &[usize], parent: &[usize], base: &[usize], mut a: usize, mut b: usize| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };
    for root in bits(vertices) {
        if mate[root] != NONE {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = NONE);
        used.iter_mut().for_each(|u| *u = false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut end = NONE;
        'search: while let Some(v) = queue.pop_front() {
            for to in bits(adj[v] & vertices) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(&mate, &parent, &base, v, to);
                    blossom.iter_mut().for_each(|b| *b = false);
                    for (mut x, child) in [(v, to), (to, v)] {
                        let mut child = child;
                        while base[x] != cur {
                            blossom[base[x]] = true;
                            blossom[base[mate[x]]] = true;
                            parent[x] = child;
                            child = mate[x];
                            x = parent[mate[x]];
                        }
                    }
                    for i in bits(vertices) {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        end = to;
                        break 'search;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = end;
        while v != NONE {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
    mate
}

/// Whether the subgraph induced by `vertices` has a perfect matching.
pub fn has_perfect_matching(adj: &[Mask], vertices: Mask) -> bool {
    if vertices.count_ones() % 2 == 1 {
        return false;
    }
    let mate = maximum_matching(adj, vertices);
    bits(vertices).all(|v| mate[v] != usize::MAX)
}

/// A perfect matching of the subgraph induced by `vertices` that contains
/// every `forced` edge and no `forbidden` edge, if one exists.
pub fn find_perfect_matching(
    adj: &[Mask],
    vertices: Mask,
    forced: &[(usize, usize)],
    forbidden: &[(usize, usize)],
) -> Option<Matching> {
    let mut adj = adj.to_vec();
    for &(u, v) in forbidden {
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
    let mut rest = vertices;
    for &(u, v) in forced {
        let m = (1 << u) | (1 << v);
        if rest & m != m || adj[u] >> v & 1 == 0 {
            return None;
        }
        rest &= !m;
    }
    if rest.count_ones() % 2 == 1 {
        return None;
    }
    let mate = maximum_matching(&adj, rest);
    let mut edges = forced.to_vec();
    for v in bits(rest) {
        let w = mate[v];
        if w == usize::MAX {
            return None;
        }
        if v < w {
            edges.push((v, w));
        }
    }
    Matching::new(edges)
}

/// Number of perfect matchings of the subgraph induced by `vertices`.
///
/// Branches on a free vertex of least residual degree (lowest id on ties),
/// memoizing on the set of vertices still to be matched.
pub fn count_perfect_matchings(adj: &[Mask], vertices: Mask) -> BigUint {
    count_with(adj, vertices, &|adj, free| {
        bits(free)
            .min_by_key(|&v| (adj[v] & free).count_ones())
            .expect("free set is nonempty")
    })
}

/// Counting with a caller-chosen branching vertex.
pub(crate) fn count_with(
    adj: &[Mask],
    vertices: Mask,
    pick: &dyn Fn(&[Mask], Mask) -> usize,
) -> BigUint {
    fn go(
        adj: &[Mask],
        free: Mask,
        pick: &dyn Fn(&[Mask], Mask) -> usize,
        memo: &mut HashMap<Mask, BigUint>,
    ) -> BigUint {
        if free == 0 {
            return BigUint::from(1u8);
        }
        if let Some(c) = memo.get(&free) {
            return c.clone();
        }
        let v = pick(adj, free);
        let mut total = BigUint::default();
        for w in bits(adj[v] & free) {
            total += go(adj, free & !(1 << v) & !(1 << w), pick, memo);
        }
        memo.insert(free, total.clone());
        total
    }
    if vertices.count_ones() % 2 == 1 {
        return BigUint::default();
    }
    go(adj, vertices, pick, &mut HashMap::new())
}

/// Whether the edges of `cycle` alternate in and out of `m`.
pub fn is_alternating(cycle: &[usize], m: &Matching) -> bool {
    let k = cycle.len();
    if k % 2 == 1 || k == 0 {
        return false;
    }
    let inside: Vec<bool> = (0..k)
        .map(|i| m.contains(cycle[i], cycle[(i + 1) % k]))
        .collect();
    (0..k).all(|i| inside[i] != inside[(i + 1) % k])
}

/// Kekulé count of a fullerene.
pub fn kekule_count(f: &Fullerene) -> BigUint {
    count_perfect_matchings(f.adjacency_masks(), full_mask(f.order()))
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// A Fries structure candidate: a perfect matching with the hexagons it
/// makes alternating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriesResult {
    pub matching: Matching,
    pub alternating_hexagons: Vec<usize>,
    /// No matching edge lies on a pentagon.
    pub pentagon_free: bool,
}

impl FriesResult {
    pub fn from_matching(f: &Fullerene, matching: Matching) -> Self {
        let alternating_hexagons = f
            .hexagons()
            .iter()
            .copied()
            .filter(|&h| is_alternating(f.face(h), &matching))
            .collect();
        let pentagon_free = f.pentagons().iter().all(|&p| {
            f.face_edges(p)
                .iter()
                .all(|&(u, v)| !matching.contains(u, v))
        });
        FriesResult {
            matching,
            alternating_hexagons,
            pentagon_free,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Branching {
    MinDegree,
    LowestId,
}

/// Branch and bound over perfect matchings, maximizing alternating
/// hexagons. A hexagon is dead once one of its vertices is matched by an
/// edge leaving it; pentagons are dead from the start. Each matching edge
/// sits on two faces and an alternating hexagon needs three of these
/// incidences, which gives the second half of the bound.
struct FriesSearch<'a> {
    f: &'a Fullerene,
    hexagons: Mask,
    mate: Vec<usize>,
    branching: Branching,
    /// Stop at the first matching reaching this value.
    target: Option<usize>,
    best: usize,
    best_matching: Option<Vec<usize>>,
}

impl<'a> FriesSearch<'a> {
    fn new(f: &'a Fullerene, branching: Branching, target: Option<usize>) -> Self {
        FriesSearch {
            f,
            hexagons: f.hexagons().iter().fold(0, |m, &h| m | (1 << h)),
            mate: vec![usize::MAX; f.order()],
            branching,
            target,
            best: 0,
            best_matching: None,
        }
    }

    fn done(&self) -> bool {
        self.target.is_some() && self.best_matching.is_some()
    }

    fn on_face(&self, h: usize) -> usize {
        self.f
            .face_edges(h)
            .iter()
            .filter(|&&(u, v)| self.mate[u] == v)
            .count()
    }

    /// Dead mask and wasted incidence count after matching `v` with `w`.
    fn apply(&mut self, v: usize, w: usize, dead: Mask, wasted: usize) -> (Mask, usize) {
        let e = self.f.edge_id(v, w).expect("edge exists");
        let sides = self.f.edge_faces(e);
        let mut dead = dead;
        let mut wasted = wasted;
        for x in [v, w] {
            let third = self
                .f
                .vertex_faces(x)
                .into_iter()
                .find(|g| !sides.contains(g))
                .expect("cubic vertex has three faces");
            if dead >> third & 1 == 0 {
                dead |= 1 << third;
                wasted += self.on_face(third);
            }
        }
        wasted += sides.iter().filter(|&&g| dead >> g & 1 == 1).count();
        self.mate[v] = w;
        self.mate[w] = v;
        (dead, wasted)
    }

    fn dfs(&mut self, adj: &[Mask], free: Mask, dead: Mask, wasted: usize) {
        let alive = (self.hexagons & !dead).count_ones() as usize;
        if free == 0 {
            if alive > self.best || (self.best_matching.is_none() && alive >= self.best) {
                self.best = alive;
                self.best_matching = Some(self.mate.clone());
            }
            return;
        }
        let bound = alive.min((self.f.order() - wasted) / 3);
        let floor = match self.target {
            Some(t) => t,
            None if self.best_matching.is_some() => self.best + 1,
            None => 0,
        };
        if bound < floor {
            return;
        }
        let v = match self.branching {
            Branching::LowestId => free.trailing_zeros() as usize,
            Branching::MinDegree => bits(free)
                .min_by_key(|&v| (adj[v] & free).count_ones())
                .unwrap(),
        };
        for w in bits(adj[v] & free) {
            let (d, x) = self.apply(v, w, dead, wasted);
            self.dfs(adj, free & !(1 << v) & !(1 << w), d, x);
            self.mate[v] = usize::MAX;
            self.mate[w] = usize::MAX;
            if self.done() {
                return;
            }
        }
    }

    fn run(&mut self) -> Option<Matching> {
        let n = self.f.order();
        let pentagons = self
            .f
            .pentagons()
            .iter()
            .fold(0, |m: Mask, &p| m | (1 << p));
        self.dfs(self.f.adjacency_masks(), full_mask(n), pentagons, 0);
        let mate = self.best_matching.as_ref()?;
        Matching::new((0..n).filter(|&v| v < mate[v]).map(|v| (v, mate[v])))
    }
}

/// Maximum number of hexagons made alternating by one perfect matching.
pub fn fries_value(f: &Fullerene) -> usize {
    let mut s = FriesSearch::new(f, Branching::MinDegree, None);
    s.run();
    s.best
}

/// Fries number together with a witness: the lexicographically least
/// optimal matching when edges are compared as sorted `(u, v)` pairs.
pub fn fries_number(f: &Fullerene) -> (usize, FriesResult) {
    let best = fries_value(f);
    // With the lowest free vertex always matched next and neighbors tried in
    // increasing order, the first matching found is the least one.
    let mut s = FriesSearch::new(f, Branching::LowestId, Some(best));
    let m = s.run().expect("a fullerene has a perfect matching");
    let result = FriesResult::from_matching(f, m);
    debug_assert_eq!(result.alternating_hexagons.len(), best);
    (best, result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::fullerene::validate;
    use crate::spiral::from_spiral;

    fn cycle(k: usize) -> Vec<Mask> {
        (0..k)
            .map(|i| (1 << ((i + 1) % k)) | (1 << ((i + k - 1) % k)))
            .collect()
    }

    /// Every perfect matching of the induced subgraph, by plain backtracking.
    fn all_matchings(
        adj: &[Mask],
        free: Mask,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        if free == 0 {
            out.push(Matching::new(acc.iter().copied()).unwrap());
            return;
        }
        let v = free.trailing_zeros() as usize;
        for w in bits(adj[v] & free) {
            acc.push((v, w));
            all_matchings(adj, free & !(1 << v) & !(1 << w), acc, out);
            acc.pop();
        }
    }

    fn brute(adj: &[Mask], vertices: Mask) -> Vec<Matching> {
        let mut out = Vec::new();
        all_matchings(adj, vertices, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn trivial_cases() {
        let hex = cycle(6);
        assert_eq!(count_perfect_matchings(&hex, 0b111111), BigUint::from(2u8));
        assert!(find_perfect_matching(&cycle(5), 0b11111, &[], &[]).is_none());
        let m = Matching::new([(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(is_alternating(&[0, 1, 2, 3, 4, 5], &m));
        let m = Matching::new([(0, 1), (3, 4)]).unwrap();
        assert!(!is_alternating(&[0, 1, 2, 3, 4, 5], &m));
        assert_eq!(m.to_string(), "0-1\n3-4\n");
        assert!(Matching::new([(0, 1), (1, 2)]).is_none());
    }

    #[test]
    fn dodecahedron_matchings() {
        let d = validate(&fixtures::dodecahedron()).unwrap();
        let adj = d.adjacency_masks();
        let m = find_perfect_matching(adj, full_mask(20), &[], &[]).unwrap();
        assert_eq!(m.len(), 10);
        assert!(m.edges().iter().all(|&(u, v)| d.edge_id(u, v).is_some()));
        assert_eq!(
            kekule_count(&d),
            BigUint::from(brute(adj, full_mask(20)).len())
        );
        assert_eq!(fries_number(&d).0, 0);
    }

    #[test]
    fn c60_kekule_count_two_orderings() {
        let c = validate(&fixtures::ih_c60()).unwrap();
        let by_degree = kekule_count(&c);
        let by_id = count_with(c.adjacency_masks(), full_mask(60), &|_, free| {
            free.trailing_zeros() as usize
        });
        assert_eq!(by_degree, by_id);
        assert_eq!(by_degree, BigUint::from(12500u32));
    }

    #[test]
    fn c60_fries_structure() {
        let c = validate(&fixtures::ih_c60()).unwrap();
        let (value, witness) = fries_number(&c);
        assert_eq!(value, 20);
        assert!(witness.pentagon_free);
        assert!(witness.matching.is_perfect_on(full_mask(60)));
        for &h in &witness.alternating_hexagons {
            assert!(is_alternating(c.face(h), &witness.matching));
        }
    }

    #[test]
    fn fries_matches_brute_force_on_small_isomers() {
        for n in [24, 26, 28, 30] {
            for s in crate::enumerate::enumerate_spirals(n).unwrap() {
                let f = from_spiral(&s).unwrap();
                let all = brute(f.adjacency_masks(), full_mask(n));
                let best = all
                    .iter()
                    .map(|m| {
                        FriesResult::from_matching(&f, m.clone())
                            .alternating_hexagons
                            .len()
                    })
                    .max()
                    .unwrap();
                let (value, witness) = fries_number(&f);
                assert_eq!(value, best);
                let least = all
                    .iter()
                    .filter(|m| {
                        FriesResult::from_matching(&f, (*m).clone())
                            .alternating_hexagons
                            .len()
                            == best
                    })
                    .min()
                    .unwrap();
                assert_eq!(&witness.matching, least);
            }
        }
    }

    #[test]
    fn blossom_agrees_with_backtracking_on_vertex_deleted_subgraphs() {
        let c = validate(&fixtures::ih_c60()).unwrap();
        let adj = c.adjacency_masks();
        let mut state: u64 = 0x9e3779b97f4a7c15;
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            // keep a random half of a 24-vertex window so brute force stays cheap
            let window: Mask = (1 << 24) - 1;
            let keep = (state as Mask | (state as Mask) << 1) & window;
            let expect = !brute(adj, keep).is_empty();
            assert_eq!(has_perfect_matching(adj, keep), expect, "mask {keep:#x}");
            let found = find_perfect_matching(adj, keep, &[], &[]);
            assert_eq!(found.is_some(), expect);
            if let Some(m) = found {
                assert!(m.is_perfect_on(keep));
            }
        }
    }
}
