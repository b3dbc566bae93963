//! Clar numbers, Clar structures, Fries structures and isomer enumeration
//! for fullerene graphs.

pub mod census;
pub mod clar;
pub mod cli;
pub mod enumerate;
pub mod fixtures;
pub mod fragment;
pub mod fullerene;
pub mod graph;
pub mod matching;
pub mod spiral;
pub mod svg;

/// Vertex set of a graph with at most 128 vertices.
pub type Mask = u128;
