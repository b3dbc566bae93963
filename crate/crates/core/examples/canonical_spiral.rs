//! Shows that relabelling and mirroring a fullerene leave its canonical
//! spiral unchanged.
//!
//! cargo run --release --example canonical_spiral

use clarkit::fixtures;
use clarkit::fullerene::validate;
use clarkit::spiral::{format_spiral, is_chiral, pentagon_positions, to_spiral};

fn main() {
    let c60 = validate(&fixtures::ih_c60()).unwrap();
    let s = to_spiral(&c60).unwrap();
    println!("canonical spiral: {}", format_spiral(&s));
    println!("pentagons at: {:?}", pentagon_positions(&s));

    // reverse the vertex numbering
    let n = c60.order();
    let perm: Vec<usize> = (0..n).rev().collect();
    let shuffled = c60.relabel(&perm);
    assert_eq!(to_spiral(&shuffled).unwrap(), s);
    assert_eq!(to_spiral(&c60.mirror()).unwrap(), s);
    println!(
        "relabelled and mirrored copies agree; chiral={}",
        is_chiral(&c60).unwrap()
    );
}
