//! Isomer catalogs with per-isomer analysis, the extremal census and the
//! tab-separated files they are stored in.
//!
//! The manifest holds one line per isomer, `n<TAB>spiral<TAB>clar<TAB>fries`.
//! The analysis sidecar holds `spiral<TAB>extremal<TAB>criterion<TAB>tags`,
//! where `criterion` is the fragment-based verdict (`-` below 60 vertices)
//! and `tags` the comma-separated pentagon component classes.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::clar::{clar_bound, clar_value};
use crate::enumerate::{enumerate, EnumerateError, Isomer};
use crate::fragment::{
    census_signature, classify_fragment, pentagon_components, theorem2_classify, CensusClass,
    FragmentTag,
};
use crate::fullerene::Fullerene;
use crate::matching::fries_value;
use crate::spiral::{format_spiral, from_spiral, parse_spiral, Spiral};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Fragment-level analysis of one isomer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub extremal: bool,
    /// Verdict of the fragment criterion; `None` below 60 vertices.
    pub criterion: Option<bool>,
    /// Class of each pentagon component, in component order.
    pub tags: Vec<FragmentTag>,
}

impl Analysis {
    pub fn of(f: &Fullerene, clar: usize) -> Self {
        let tags = pentagon_components(f)
            .iter()
            .map(|g| {
                classify_fragment(f, g)
                    .expect("pentagon components are maximal")
                    .tag
            })
            .collect();
        let criterion = theorem2_classify(f).ok().map(|r| r.extremal);
        Analysis {
            extremal: 6 * clar + 12 == f.order(),
            criterion,
            tags,
        }
    }

    pub fn census_class(&self) -> CensusClass {
        census_signature(&self.tags)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub isomer: Isomer,
    pub clar: usize,
    pub fries: usize,
    pub analysis: Option<Analysis>,
}

/// All isomers of one order, sorted by canonical spiral.
#[derive(Debug, Clone)]
pub struct IsomerCatalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

impl IsomerCatalog {
    /// Enumerates the isomers and computes their Clar and Fries numbers.
    pub fn enumerate(n: usize) -> Result<Self, CensusError> {
        let entries = enumerate(n)?
            .into_par_iter()
            .map(|isomer| CatalogEntry {
                clar: clar_value(&isomer.graph),
                fries: fries_value(&isomer.graph),
                isomer,
                analysis: None,
            })
            .collect();
        Ok(IsomerCatalog { n, entries })
    }

    /// Fills in the fragment analysis of every entry.
    pub fn analyze(&mut self) {
        self.entries.par_iter_mut().for_each(|e| {
            e.analysis = Some(Analysis::of(&e.isomer.graph, e.clar));
        });
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries whose Clar number meets the bound, with their one-based
    /// position in the catalog.
    pub fn extremal(&self) -> Vec<CensusEntry> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| 6 * e.clar + 12 == self.n)
            .map(|(i, e)| CensusEntry {
                index: i + 1,
                spiral: e.isomer.spiral.clone(),
                analysis: e
                    .analysis
                    .clone()
                    .unwrap_or_else(|| Analysis::of(&e.isomer.graph, e.clar)),
            })
            .collect()
    }
}

/// One extremal isomer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    /// One-based position in the catalog of its order.
    pub index: usize,
    pub spiral: Spiral,
    pub analysis: Analysis,
}

/// The extremal isomers on `n` vertices.
pub fn extremal_census(n: usize) -> Result<Vec<CensusEntry>, CensusError> {
    let catalog = IsomerCatalog::enumerate(n)?;
    Ok(catalog.extremal())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusBreakdown {
    pub classes: BTreeMap<CensusClass, usize>,
    /// Members whose pentagons are all isolated.
    pub isolated: usize,
    pub total: usize,
}

pub fn census_breakdown(entries: &[CensusEntry]) -> CensusBreakdown {
    let mut b = CensusBreakdown::default();
    for e in entries {
        *b.classes.entry(e.analysis.census_class()).or_insert(0) += 1;
        if e.analysis.tags.iter().all(|&t| t == FragmentTag::P) {
            b.isolated += 1;
        }
        b.total += 1;
    }
    b
}

fn join_tags(tags: &[FragmentTag]) -> String {
    tags.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn write_manifest(catalog: &IsomerCatalog, mut w: impl Write) -> io::Result<()> {
    for e in &catalog.entries {
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            catalog.n,
            format_spiral(&e.isomer.spiral),
            e.clar,
            e.fries
        )?;
    }
    Ok(())
}

/// Writes the sidecar; entries without analysis are skipped.
pub fn write_analysis(catalog: &IsomerCatalog, mut w: impl Write) -> io::Result<()> {
    for e in &catalog.entries {
        let Some(a) = &e.analysis else { continue };
        let criterion = a.criterion.map_or("-", yes_no);
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            format_spiral(&e.isomer.spiral),
            yes_no(a.extremal),
            criterion,
            join_tags(&a.tags)
        )?;
    }
    Ok(())
}

/// `index<TAB>spiral<TAB>class<TAB>tags`, one line per extremal isomer.
pub fn write_extremal(entries: &[CensusEntry], mut w: impl Write) -> io::Result<()> {
    for e in entries {
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            e.index,
            format_spiral(&e.spiral),
            e.analysis.census_class(),
            join_tags(&e.analysis.tags)
        )?;
    }
    Ok(())
}

/// `class<TAB>count` for every class, then the isolated-pentagon and total
/// counts.
pub fn write_breakdown(b: &CensusBreakdown, mut w: impl Write) -> io::Result<()> {
    for class in [
        CensusClass::B3,
        CensusClass::B1Power,
        CensusClass::B2B1,
        CensusClass::Units,
        CensusClass::Other,
    ] {
        writeln!(
            w,
            "{}\t{}",
            class,
            b.classes.get(&class).copied().unwrap_or(0)
        )?;
    }
    writeln!(w, "isolated\t{}", b.isolated)?;
    writeln!(w, "total\t{}", b.total)
}

/// Reads a manifest back, rebuilding each graph from its spiral.
pub fn read_manifest(text: &str) -> Result<IsomerCatalog, CensusError> {
    let mut n = None;
    let mut entries = Vec::new();
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let err = |message: String| CensusError::Parse {
            line: i + 1,
            message,
        };
        let cols: Vec<&str> = line.split('\t').collect();
        let [order, spiral, clar, fries] = cols[..] else {
            return Err(err(format!(
                "expected 4 tab-separated columns, found {}",
                cols.len()
            )));
        };
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("not a number: {s:?}")))
        };
        let order = number(order)?;
        if *n.get_or_insert(order) != order {
            return Err(err(format!("order {order} differs from the first line")));
        }
        let spiral = parse_spiral(spiral).map_err(|e| err(e.to_string()))?;
        let graph = from_spiral(&spiral).map_err(|e| err(e.to_string()))?;
        if graph.order() != order {
            return Err(err(format!(
                "spiral has {} vertices, line says {order}",
                graph.order()
            )));
        }
        entries.push(CatalogEntry {
            isomer: Isomer { spiral, graph },
            clar: number(clar)?,
            fries: number(fries)?,
            analysis: None,
        });
    }
    Ok(IsomerCatalog {
        n: n.unwrap_or(0),
        entries,
    })
}

/// Whether the Clar number stays within `floor((n - 12) / 6)`.
pub fn within_bound(e: &CatalogEntry) -> bool {
    e.clar <= clar_bound(e.isomer.graph.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let mut c = IsomerCatalog::enumerate(32).unwrap();
        assert_eq!(c.len(), 6);
        let mut text = Vec::new();
        write_manifest(&c, &mut text).unwrap();
        let text = String::from_utf8(text).unwrap();
        assert_eq!(text.lines().count(), 6);
        assert!(text.lines().all(|l| l.starts_with("32\t")));
        let back = read_manifest(&text).unwrap();
        assert_eq!(back.n, 32);
        for (a, b) in c.entries.iter().zip(&back.entries) {
            assert_eq!(
                (&a.isomer.spiral, a.clar, a.fries),
                (&b.isomer.spiral, b.clar, b.fries)
            );
        }
        c.analyze();
        let mut side = Vec::new();
        write_analysis(&c, &mut side).unwrap();
        let side = String::from_utf8(side).unwrap();
        assert_eq!(side.lines().count(), 6);
        assert!(side.lines().all(|l| l.split('\t').nth(2) == Some("-")));
    }

    #[test]
    fn manifest_errors_name_the_line() {
        let e = read_manifest("20\t5,5,5,5,5,5,5,5,5,5,5,5\t0\t0\n20\tx\t0\t0\n").unwrap_err();
        assert!(matches!(e, CensusError::Parse { line: 2, .. }), "{e}");
        let e = read_manifest("20\t5,5\n").unwrap_err();
        assert!(matches!(e, CensusError::Parse { line: 1, .. }));
    }

    #[test]
    fn no_extremal_isomers_off_the_divisibility_grid() {
        let c = IsomerCatalog::enumerate(20).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.extremal().is_empty());
        assert!(IsomerCatalog::enumerate(22).unwrap().is_empty());
        assert!(c.entries.iter().all(within_bound));
    }

    #[test]
    fn breakdown_counts_isolated_members() {
        let e = |tags: Vec<FragmentTag>| CensusEntry {
            index: 1,
            spiral: vec![],
            analysis: Analysis {
                extremal: true,
                criterion: Some(true),
                tags,
            },
        };
        let b = census_breakdown(&[e(vec![FragmentTag::P; 12]), e(vec![FragmentTag::B3; 2])]);
        assert_eq!((b.isolated, b.total), (1, 2));
        assert_eq!(b.classes[&CensusClass::Units], 1);
        let mut out = Vec::new();
        write_breakdown(&b, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "B3\t1\nB1^k\t0\nB2*B1\t0\nB1/B2\t1\nother\t0\nisolated\t1\ntotal\t2\n"
        );
    }
}
