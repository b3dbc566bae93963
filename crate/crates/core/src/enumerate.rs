//! Isomer enumeration by canonical spiral generation.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::fullerene::{Fullerene, MAX_VERTICES};
use crate::spiral::{dual_from_spiral, from_spiral, is_least_spiral, Spiral, SpiralError, Windup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {0} is outside the supported range (even, 20..={MAX_VERTICES})")]
    OutOfSupportedRange(usize),
    #[error("worker pool: {0}")]
    Workers(String),
    #[error("isomer {spiral} failed validation: {source}")]
    Invalid { spiral: String, source: SpiralError },
}

/// One isomer: its canonical spiral and the graph it winds into.
#[derive(Debug, Clone)]
pub struct Isomer {
    pub spiral: Spiral,
    pub graph: Fullerene,
}

/// Prefix length at which the search tree is split into parallel jobs.
const SPLIT_DEPTH: usize = 12;

struct Search {
    faces: usize,
}

impl Search {
    /// Extends `seq` (already wound into `w`) in every way that keeps the
    /// windup alive, collecting closed spirals that are canonical.
    fn descend(&self, w: &Windup, seq: &mut Vec<u8>, pentagons_left: usize, out: &mut Vec<Spiral>) {
        let pos = seq.len();
        let remaining = self.faces - pos;
        if remaining == 1 {
            let size = if pentagons_left == 1 { 5 } else { 6 };
            let mut w = w.clone();
            if w.close(size, None) {
                seq.push(size);
                if is_canonical(seq) {
                    out.push(seq.clone());
                }
                seq.pop();
            }
            return;
        }
        for size in [5u8, 6] {
            let left = if size == 5 {
                if pentagons_left == 0 {
                    continue;
                }
                pentagons_left - 1
            } else {
                if remaining - 1 < pentagons_left {
                    continue;
                }
                pentagons_left
            };
            let mut next = w.clone();
            if next.add(size, None) {
                seq.push(size);
                self.descend(&next, seq, left, out);
                seq.pop();
            }
        }
    }

    /// Live prefixes of length `depth`, each with its windup state.
    fn prefixes(&self, depth: usize) -> Vec<(Vec<u8>, Windup, usize)> {
        let mut w = Windup::new();
        assert!(w.add(5, None));
        let mut level = vec![(vec![5u8], w, 11usize)];
        while level[0].0.len() < depth {
            let mut next_level = Vec::new();
            for (seq, w, left) in level {
                let remaining = self.faces - seq.len();
                for size in [5u8, 6] {
                    if (size == 5 && left == 0) || (size == 6 && remaining - 1 < left) {
                        continue;
                    }
                    let mut w2 = w.clone();
                    if w2.add(size, None) {
                        let mut s = seq.clone();
                        s.push(size);
                        next_level.push((s, w2, left - (size == 5) as usize));
                    }
                }
            }
            level = next_level;
            if level.is_empty() {
                break;
            }
        }
        level
    }
}

/// A closed spiral is kept exactly when it is its own canonical form.
fn is_canonical(seq: &[u8]) -> bool {
    match dual_from_spiral(seq) {
        Ok(d) => is_least_spiral(&d, seq),
        Err(_) => false,
    }
}

/// Canonical spirals of all fullerene isomers on `n` vertices, mirror
/// images identified, sorted ascending. Uses the global rayon pool.
pub fn enumerate_spirals(n: usize) -> Result<Vec<Spiral>, EnumerateError> {
    if n % 2 == 1 || !(20..=MAX_VERTICES).contains(&n) {
        return Err(EnumerateError::OutOfSupportedRange(n));
    }
    let search = Search { faces: n / 2 + 2 };
    let depth = SPLIT_DEPTH.min(search.faces - 1);
    let jobs = search.prefixes(depth);
    let found: Vec<Vec<Spiral>> = jobs
        .into_par_iter()
        .map(|(mut seq, w, left)| {
            let mut out = Vec::new();
            search.descend(&w, &mut seq, left, &mut out);
            out
        })
        .collect();
    let merged: BTreeSet<Spiral> = found.into_iter().flatten().collect();
    Ok(merged.into_iter().collect())
}

/// All isomers on `n` vertices, each validated, sorted by canonical spiral.
pub fn enumerate(n: usize) -> Result<Vec<Isomer>, EnumerateError> {
    let spirals = enumerate_spirals(n)?;
    spirals
        .into_par_iter()
        .map(|spiral| match from_spiral(&spiral) {
            Ok(graph) => Ok(Isomer { spiral, graph }),
            Err(source) => Err(EnumerateError::Invalid {
                spiral: crate::spiral::format_spiral(&spiral),
                source,
            }),
        })
        .collect()
}

/// Runs `job` on a dedicated pool of `workers` threads (0 means the rayon
/// default).
pub fn with_workers<T: Send>(
    workers: usize,
    job: impl FnOnce() -> T + Send,
) -> Result<T, EnumerateError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| EnumerateError::Workers(e.to_string()))?;
    Ok(pool.install(job))
}
