//! Face spirals: windup into a sphere, generation from an embedding, and
//! the canonical (lexicographically least) spiral used as an isomorphism
//! certificate.

use thiserror::Error;

use crate::fullerene::{Fullerene, FullereneError, MAX_VERTICES};
use crate::graph::{self, RotationSystem};

/// Face sizes in spiral order.
pub type Spiral = Vec<u8>;

pub(crate) const MAX_FACES: usize = MAX_VERTICES / 2 + 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiralError {
    #[error("face {position} has size {size}; spirals use only 5 and 6")]
    BadFaceSize { position: usize, size: u8 },
    #[error("spiral has {0} faces, more than supported")]
    TooLong(usize),
    #[error("spiral does not close into a sphere")]
    SpiralDoesNotClose,
    #[error("no face spiral exists for this graph")]
    NoSpiralFound,
    #[error("cannot parse spiral: {0}")]
    Parse(String),
    #[error(transparent)]
    Fullerene(#[from] FullereneError),
}

/// Incremental windup state. Faces are added one at a time; the open ring
/// holds faces that still have free sides, earliest at the front.
#[derive(Clone)]
pub(crate) struct Windup {
    valence: [i8; MAX_FACES],
    ring: [u8; MAX_FACES],
    head: usize,
    tail: usize,
    count: usize,
}

impl Windup {
    pub(crate) fn new() -> Self {
        Windup {
            valence: [0; MAX_FACES],
            ring: [0; MAX_FACES],
            head: 0,
            tail: 0,
            count: 0,
        }
    }

    fn connect(
        &mut self,
        k: usize,
        slot: usize,
        edges: &mut Option<&mut Vec<(usize, usize)>>,
    ) -> bool {
        let x = self.ring[slot] as usize;
        self.valence[x] -= 1;
        self.valence[k] -= 1;
        if let Some(e) = edges {
            e.push((x, k));
        }
        self.valence[x] >= 0 && self.valence[k] >= 0
    }

    /// Adds a face that is not the last one. Returns false when the spiral
    /// can no longer close.
    pub(crate) fn add(&mut self, size: u8, mut edges: Option<&mut Vec<(usize, usize)>>) -> bool {
        let k = self.count;
        if k + 1 >= MAX_FACES {
            return false;
        }
        self.valence[k] = size as i8;
        self.count += 1;
        if k >= 1 && !self.connect(k, self.tail - 1, &mut edges) {
            return false;
        }
        if k >= 2 {
            if self.head + 1 >= self.tail || !self.connect(k, self.head, &mut edges) {
                return false;
            }
            loop {
                if self.valence[self.ring[self.head] as usize] == 0 {
                    self.head += 1;
                    if self.head + 1 >= self.tail || !self.connect(k, self.head, &mut edges) {
                        return false;
                    }
                } else if self.valence[self.ring[self.tail - 1] as usize] == 0 {
                    self.tail -= 1;
                    if self.head + 1 >= self.tail || !self.connect(k, self.tail - 1, &mut edges) {
                        return false;
                    }
                } else {
                    break;
                }
            }
        }
        if self.valence[k] <= 0 {
            return false;
        }
        self.ring[self.tail] = k as u8;
        self.tail += 1;
        true
    }

    /// Adds the last face, which must fill the remaining hole exactly.
    pub(crate) fn close(&mut self, size: u8, mut edges: Option<&mut Vec<(usize, usize)>>) -> bool {
        let k = self.count;
        if self.tail - self.head != size as usize {
            return false;
        }
        if (self.head..self.tail).any(|s| self.valence[self.ring[s] as usize] != 1) {
            return false;
        }
        self.valence[k] = size as i8;
        self.count += 1;
        for s in self.head..self.tail {
            self.connect(k, s, &mut edges);
        }
        self.head = self.tail;
        true
    }
}

/// Face adjacency pairs of the sphere a spiral winds into.
fn windup_edges(sizes: &[u8]) -> Result<Vec<(usize, usize)>, SpiralError> {
    if sizes.len() > MAX_FACES {
        return Err(SpiralError::TooLong(sizes.len()));
    }
    if let Some(p) = sizes.iter().position(|&s| s != 5 && s != 6) {
        return Err(SpiralError::BadFaceSize {
            position: p,
            size: sizes[p],
        });
    }
    let Some((&last, body)) = sizes.split_last() else {
        return Err(SpiralError::SpiralDoesNotClose);
    };
    let mut edges = Vec::new();
    let mut w = Windup::new();
    for &s in body {
        if !w.add(s, Some(&mut edges)) {
            return Err(SpiralError::SpiralDoesNotClose);
        }
    }
    if !w.close(last, Some(&mut edges)) {
        return Err(SpiralError::SpiralDoesNotClose);
    }
    Ok(edges)
}

/// Orders each face's neighbors cyclically and orients all of them
/// coherently. Fails unless every link is a single cycle, as it is in the
/// dual of a fullerene.
fn orient(face_count: usize, edges: &[(usize, usize)]) -> Option<RotationSystem> {
    let mut adj = vec![0u128; face_count];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(face_count);
    for f in 0..face_count {
        let nb = adj[f];
        let degree = nb.count_ones() as usize;
        let first = nb.trailing_zeros() as usize;
        let mut cycle = Vec::with_capacity(degree);
        cycle.push(first);
        let mut seen = 1u128 << first;
        let mut prev = usize::MAX;
        loop {
            let cur = *cycle.last().unwrap();
            let common = adj[cur] & nb;
            if common.count_ones() != 2 {
                return None;
            }
            let a = common.trailing_zeros() as usize;
            let b = (common & (common - 1)).trailing_zeros() as usize;
            let next = if a != prev { a } else { b };
            if next == first {
                break;
            }
            if seen & (1 << next) != 0 {
                return None;
            }
            seen |= 1 << next;
            prev = cur;
            cycle.push(next);
        }
        if cycle.len() != degree {
            return None;
        }
        cycles.push(cycle);
    }
    // face 0 goes around with face 1 followed by face 2
    let mut oriented = vec![false; face_count];
    let c0 = &cycles[0];
    let i = c0.iter().position(|&x| x == 1)?;
    if c0[(i + 1) % c0.len()] != 2 {
        cycles[0].reverse();
    }
    oriented[0] = true;
    let mut stack = vec![0];
    while let Some(f) = stack.pop() {
        for idx in 0..cycles[f].len() {
            let len = cycles[f].len();
            let g = cycles[f][idx];
            let h = cycles[f][(idx + 1) % len];
            // triangle (f, g, h) forces f to follow h around g
            let cg = &cycles[g];
            let j = cg.iter().position(|&x| x == h)?;
            let fwd = cg[(j + 1) % cg.len()] == f;
            if oriented[g] {
                if !fwd {
                    return None;
                }
            } else {
                if !fwd {
                    if cg[(j + cg.len() - 1) % cg.len()] != f {
                        return None;
                    }
                    cycles[g].reverse();
                }
                oriented[g] = true;
                stack.push(g);
            }
        }
    }
    RotationSystem::new(cycles).ok()
}

/// The dual triangulation a spiral winds into; vertex `i` is spiral face `i`.
pub fn dual_from_spiral(sizes: &[u8]) -> Result<RotationSystem, SpiralError> {
    let edges = windup_edges(sizes)?;
    orient(sizes.len(), &edges).ok_or(SpiralError::SpiralDoesNotClose)
}

/// Winds a spiral into a fullerene.
pub fn from_spiral(sizes: &[u8]) -> Result<Fullerene, SpiralError> {
    let d = dual_from_spiral(sizes)?;
    let primal = graph::dual(&d).map_err(|_| SpiralError::SpiralDoesNotClose)?;
    Ok(Fullerene::new(primal)?)
}

enum Walk {
    Done,
    Worse,
    Stuck,
}

/// Scratch space for spiral walks over one dual triangulation.
struct Walker<'a> {
    dual: &'a RotationSystem,
    sizes: &'a [u8],
    visited: Vec<bool>,
    open: Vec<u8>,
    order: Vec<usize>,
    seq: Vec<u8>,
}

impl<'a> Walker<'a> {
    fn new(dual: &'a RotationSystem, sizes: &'a [u8]) -> Self {
        let n = dual.order();
        Walker {
            dual,
            sizes,
            visited: vec![false; n],
            open: vec![0; n],
            order: Vec::with_capacity(n),
            seq: Vec::with_capacity(n),
        }
    }

    fn place(&mut self, f: usize) {
        self.visited[f] = true;
        for &g in self.dual.neighbors(f) {
            self.open[g] -= 1;
        }
        self.order.push(f);
        self.seq.push(self.sizes[f]);
    }

    /// Spiral starting at `f0`, then `f1`, turning counterclockwise or
    /// clockwise. Gives up as soon as the sequence exceeds `best`.
    fn walk(&mut self, f0: usize, f1: usize, ccw: bool, best: Option<&[u8]>) -> Walk {
        let n = self.dual.order();
        for f in 0..n {
            self.visited[f] = false;
            self.open[f] = self.dual.degree(f) as u8;
        }
        self.order.clear();
        self.seq.clear();
        let mut tied = best.is_some();
        let mut check = |seq: &[u8]| -> bool {
            if tied {
                let i = seq.len() - 1;
                let b = best.unwrap()[i];
                if seq[i] > b {
                    return false;
                }
                tied = seq[i] == b;
            }
            true
        };
        self.place(f0);
        if !check(&self.seq) {
            return Walk::Worse;
        }
        self.place(f1);
        if !check(&self.seq) {
            return Walk::Worse;
        }
        let mut r = 0;
        while self.order.len() < n {
            while self.open[self.order[r]] == 0 {
                r += 1;
            }
            let ro = self.order[r];
            let last = *self.order.last().unwrap();
            if ro == last {
                return Walk::Stuck;
            }
            let l = self.dual.neighbors(ro);
            let Some(i) = l.iter().position(|&x| x == last) else {
                return Walk::Stuck;
            };
            let x = if ccw {
                l[(i + 1) % l.len()]
            } else {
                l[(i + l.len() - 1) % l.len()]
            };
            if self.visited[x] {
                return Walk::Stuck;
            }
            self.place(x);
            if !check(&self.seq) {
                return Walk::Worse;
            }
        }
        Walk::Done
    }
}

/// Canonical spiral of an embedded sphere together with the face order
/// that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub spiral: Spiral,
    /// `face_order[i]` is the face at spiral position `i`.
    pub face_order: Vec<usize>,
}

/// Lexicographically least spiral of a dual triangulation with the given
/// face sizes, over every start, second face and turning sense. Pentagon
/// starts always win when one of them closes, so other starts are only
/// tried as a fallback.
pub fn canonical_of_dual(
    dual: &RotationSystem,
    sizes: &[u8],
) -> Result<CanonicalForm, SpiralError> {
    let mut w = Walker::new(dual, sizes);
    let mut best: Option<CanonicalForm> = None;
    for pentagon_starts in [true, false] {
        #[allow(clippy::needless_range_loop)]
        for f0 in 0..dual.order() {
            if (sizes[f0] == 5) != pentagon_starts {
                continue;
            }
            for &f1 in dual.neighbors(f0) {
                for ccw in [true, false] {
                    let bound = best.as_ref().map(|b| b.spiral.as_slice());
                    if let Walk::Done = w.walk(f0, f1, ccw, bound) {
                        if best.as_ref().is_none_or(|b| w.seq < b.spiral) {
                            best = Some(CanonicalForm {
                                spiral: w.seq.clone(),
                                face_order: w.order.clone(),
                            });
                        }
                    }
                }
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.ok_or(SpiralError::NoSpiralFound)
}

/// True when no spiral of `dual` (whose faces are in spiral order `seq`)
/// is lexicographically smaller than `seq`.
pub(crate) fn is_least_spiral(dual: &RotationSystem, seq: &[u8]) -> bool {
    let mut w = Walker::new(dual, seq);
    for f0 in 0..dual.order() {
        if seq[f0] != 5 {
            continue;
        }
        for &f1 in dual.neighbors(f0) {
            for ccw in [true, false] {
                if let Walk::Done = w.walk(f0, f1, ccw, Some(seq)) {
                    if w.seq.as_slice() < seq {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Canonical form of a fullerene. Mirror images share a canonical form.
pub fn canonical_form(f: &Fullerene) -> Result<CanonicalForm, SpiralError> {
    canonical_of_dual(&f.dual_rotation(), &f.face_sizes())
}

/// The canonical spiral of `f`.
pub fn to_spiral(f: &Fullerene) -> Result<Spiral, SpiralError> {
    canonical_form(f).map(|c| c.spiral)
}

/// Isomorphism test through canonical spirals, mirror images identified.
pub fn is_isomorphic(a: &Fullerene, b: &Fullerene) -> Result<bool, SpiralError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(to_spiral(a)? == to_spiral(b)?)
}

/// True when `f` is not isomorphic to its mirror image by an orientation
/// preserving map, i.e. the fullerene is chiral.
pub fn is_chiral(f: &Fullerene) -> Result<bool, SpiralError> {
    let d = f.dual_rotation();
    let sizes = f.face_sizes();
    let mut w = Walker::new(&d, &sizes);
    let canon = canonical_of_dual(&d, &sizes)?;
    let mut senses = [false; 2];
    for f0 in 0..d.order() {
        for &f1 in d.neighbors(f0) {
            for (i, ccw) in [true, false].into_iter().enumerate() {
                if let Walk::Done = w.walk(f0, f1, ccw, Some(&canon.spiral)) {
                    senses[i] |= w.seq == canon.spiral;
                }
            }
        }
    }
    Ok(!(senses[0] && senses[1]))
}

/// Comma-separated face sizes, e.g. `5,6,6,5`.
pub fn format_spiral(sizes: &[u8]) -> String {
    let parts: Vec<String> = sizes.iter().map(u8::to_string).collect();
    parts.join(",")
}

pub fn parse_spiral(text: &str) -> Result<Spiral, SpiralError> {
    text.trim()
        .split(',')
        .enumerate()
        .map(|(i, t)| {
            let s: u8 = t
                .trim()
                .parse()
                .map_err(|_| SpiralError::Parse(format!("entry {} is {:?}", i + 1, t.trim())))?;
            if s != 5 && s != 6 {
                return Err(SpiralError::BadFaceSize {
                    position: i,
                    size: s,
                });
            }
            Ok(s)
        })
        .collect()
}

/// One-based positions of the pentagons in a spiral.
pub fn pentagon_positions(sizes: &[u8]) -> Vec<usize> {
    (0..sizes.len())
        .filter(|&i| sizes[i] == 5)
        .map(|i| i + 1)
        .collect()
}

/// Spiral for an `n`-vertex fullerene with pentagons at the given one-based
/// positions.
pub fn from_pentagon_positions(n: usize, positions: &[usize]) -> Spiral {
    let mut s = vec![6; n / 2 + 2];
    for &p in positions {
        s[p - 1] = 5;
    }
    s
}
