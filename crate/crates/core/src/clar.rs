//! Clar numbers, Clar formulas and sextet patterns.

use thiserror::Error;

use crate::fullerene::Fullerene;
use crate::matching::{bits, extend_matching, find_perfect_matching, full_mask, Matching};
use crate::Mask;

/// Formula enumeration stops after this many patterns.
pub const FORMULA_CAP: usize = 10_000;

/// Hexagon count above which the exhaustive oracle refuses to run.
pub const BRUTE_FORCE_LIMIT: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClarError {
    #[error("face {0} is not a hexagon")]
    NotAHexagon(usize),
    #[error("{0} hexagons is too many for exhaustive search (limit {BRUTE_FORCE_LIMIT})")]
    TooManyHexagons(usize),
}

/// Pairwise disjoint hexagons whose removal leaves a graph with a perfect
/// matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SextetPattern {
    /// Sorted face ids.
    pub hexagons: Vec<usize>,
    /// Perfect matching of the whole graph, alternating on every hexagon.
    pub witness: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClarResult {
    pub clar_number: usize,
    pub formulas: Vec<SextetPattern>,
    /// More than [`FORMULA_CAP`] formulas exist; only the first ones are kept.
    pub truncated: bool,
    /// `⌊(n − 12) / 6⌋`.
    pub bound: usize,
    pub extremal: bool,
}

pub fn clar_bound(n: usize) -> usize {
    n.saturating_sub(12) / 6
}

fn vertex_mask(f: &Fullerene, hexagons: &[usize]) -> Option<Mask> {
    let mut used: Mask = 0;
    for &h in hexagons {
        let m = f.face_mask(h);
        if used & m != 0 {
            return None;
        }
        used |= m;
    }
    Some(used)
}

/// Witness that `hexagons` is a sextet pattern, or `None` if the hexagons
/// overlap or their removal leaves no perfect matching.
pub fn is_sextet_pattern(f: &Fullerene, hexagons: &[usize]) -> Result<Option<Matching>, ClarError> {
    if let Some(&p) = hexagons
        .iter()
        .find(|&&h| h >= f.face_count() || f.is_pentagon(h))
    {
        return Err(ClarError::NotAHexagon(p));
    }
    let Some(used) = vertex_mask(f, hexagons) else {
        return Ok(None);
    };
    let Some(rest) =
        find_perfect_matching(f.adjacency_masks(), full_mask(f.order()) & !used, &[], &[])
    else {
        return Ok(None);
    };
    let mut edges = rest.edges().to_vec();
    for &h in hexagons {
        let c = f.face(h);
        edges.extend([(c[0], c[1]), (c[2], c[3]), (c[4], c[5])]);
    }
    Ok(Some(
        Matching::new(edges).expect("hexagons and residual are disjoint"),
    ))
}

/// Branch and bound over hexagons in a fixed order.
struct ClarSearch<'a> {
    adj: &'a [Mask],
    all: Mask,
    order: Vec<usize>,
    masks: Vec<Mask>,
    bound: usize,
    best: usize,
    /// Collect every pattern of exactly this size instead of maximizing.
    collect: Option<usize>,
    found: Vec<Vec<usize>>,
    truncated: bool,
}

impl<'a> ClarSearch<'a> {
    fn new(f: &'a Fullerene) -> Self {
        let mut order = f.hexagons().to_vec();
        let hex_degree = |h: usize| {
            f.face_neighbors(h)
                .iter()
                .filter(|&&g| !f.is_pentagon(g))
                .count()
        };
        order.sort_by_key(|&h| (std::cmp::Reverse(hex_degree(h)), h));
        let masks = order.iter().map(|&h| f.face_mask(h)).collect();
        ClarSearch {
            adj: f.adjacency_masks(),
            all: full_mask(f.order()),
            order,
            masks,
            bound: clar_bound(f.order()),
            best: 0,
            collect: None,
            found: Vec::new(),
            truncated: false,
        }
    }

    /// Upper bound on how many more hexagons from position `from` on can be
    /// added: a greedy cover of the candidates by cliques of hexagons
    /// sharing a vertex, each of which contributes at most one.
    fn remaining_bound(&self, from: usize, used: Mask) -> usize {
        let mut candidates: Vec<usize> = (from..self.order.len())
            .filter(|&i| self.masks[i] & used == 0)
            .collect();
        let mut cliques = 0;
        while let Some(&i) = candidates.first() {
            let v = bits(self.masks[i])
                .max_by_key(|&v| {
                    candidates
                        .iter()
                        .filter(|&&j| self.masks[j] >> v & 1 == 1)
                        .count()
                })
                .unwrap();
            candidates.retain(|&j| self.masks[j] >> v & 1 == 0);
            cliques += 1;
        }
        cliques
    }

    fn start(&self) -> Vec<usize> {
        let m = extend_matching(self.adj, self.all, vec![usize::MAX; self.adj.len()]);
        assert!(
            m.iter().all(|&w| w != usize::MAX),
            "fullerenes have perfect matchings"
        );
        m
    }

    fn stop(&self) -> bool {
        match self.collect {
            None => self.best >= self.bound,
            Some(_) => self.truncated,
        }
    }

    /// Repairs `mate`, a perfect matching of the graph minus `used`, after
    /// the vertices in `removed` are deleted too.
    fn residual_matching(&self, mate: &[usize], used: Mask, removed: Mask) -> Option<Vec<usize>> {
        let mut next = mate.to_vec();
        for v in bits(removed) {
            let w = mate[v];
            next[v] = usize::MAX;
            if removed >> w & 1 == 0 {
                next[w] = usize::MAX;
            }
        }
        let rest = self.all & !used & !removed;
        let next = extend_matching(self.adj, rest, next);
        bits(rest).all(|v| next[v] != usize::MAX).then_some(next)
    }

    fn dfs(&mut self, from: usize, used: Mask, mate: &[usize], chosen: &mut Vec<usize>) {
        let k = chosen.len();
        match self.collect {
            None => self.best = self.best.max(k),
            Some(size) if k == size => {
                if self.found.len() == FORMULA_CAP {
                    self.truncated = true;
                } else {
                    let mut h: Vec<usize> = chosen.iter().map(|&i| self.order[i]).collect();
                    h.sort_unstable();
                    self.found.push(h);
                }
                return;
            }
            Some(_) => {}
        }
        let goal = self.collect.unwrap_or(self.best + 1);
        if k + self.bound.saturating_sub(k).min(self.order.len() - from) < goal {
            return;
        }
        if k + self.remaining_bound(from, used) < goal {
            return;
        }
        for i in from..self.order.len() {
            if self.masks[i] & used != 0 {
                continue;
            }
            // a failed residual matching dooms every superset as well
            let Some(next_mate) = self.residual_matching(mate, used, self.masks[i]) else {
                continue;
            };
            chosen.push(i);
            self.dfs(i + 1, used | self.masks[i], &next_mate, chosen);
            chosen.pop();
            if self.stop() {
                return;
            }
            if k + self.remaining_bound(i + 1, used) < self.collect.unwrap_or(self.best + 1) {
                return;
            }
        }
    }
}

/// The Clar number alone.
pub fn clar_value(f: &Fullerene) -> usize {
    let mut s = ClarSearch::new(f);
    let mate = s.start();
    s.dfs(0, 0, &mate, &mut Vec::new());
    s.best
}

/// All Clar formulas, up to [`FORMULA_CAP`], sorted; the flag reports
/// truncation.
pub fn enumerate_clar_formulas(f: &Fullerene) -> (Vec<SextetPattern>, bool) {
    let c = clar_value(f);
    formulas_of_size(f, c)
}

fn formulas_of_size(f: &Fullerene, size: usize) -> (Vec<SextetPattern>, bool) {
    let mut s = ClarSearch::new(f);
    s.collect = Some(size);
    let mate = s.start();
    s.dfs(0, 0, &mate, &mut Vec::new());
    let mut sets = s.found;
    sets.sort();
    let patterns = sets
        .into_iter()
        .map(|hexagons| {
            let witness = is_sextet_pattern(f, &hexagons)
                .expect("search only picks hexagons")
                .expect("search only keeps feasible sets");
            SextetPattern { hexagons, witness }
        })
        .collect();
    (patterns, s.truncated)
}

/// Clar number, formulas and extremality.
pub fn clar_number(f: &Fullerene) -> ClarResult {
    let clar_number = clar_value(f);
    let (formulas, truncated) = formulas_of_size(f, clar_number);
    let bound = clar_bound(f.order());
    ClarResult {
        clar_number,
        formulas,
        truncated,
        bound,
        extremal: 6 * clar_number + 12 == f.order(),
    }
}

/// Whether the Clar number reaches `(n − 12) / 6` exactly.
pub fn is_extremal(f: &Fullerene) -> bool {
    let n = f.order();
    (n - 12).is_multiple_of(6) && clar_value(f) * 6 == n - 12
}

/// Exhaustive Clar number over all hexagon subsets.
pub fn clar_brute_force(f: &Fullerene) -> Result<usize, ClarError> {
    let hex = f.hexagons();
    if hex.len() > BRUTE_FORCE_LIMIT {
        return Err(ClarError::TooManyHexagons(hex.len()));
    }
    let mut best = 0;
    for subset in 0u32..1 << hex.len() {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let chosen: Vec<usize> = (0..hex.len())
            .filter(|&i| subset >> i & 1 == 1)
            .map(|i| hex[i])
            .collect();
        if is_sextet_pattern(f, &chosen)?.is_some() {
            best = size;
        }
    }
    Ok(best)
}
