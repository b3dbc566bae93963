//! Fries number of Ih C60 with its witness matching, and the number of
//! Kekulé structures.
//!
//! cargo run --release --example fries_structure

use clarkit::fixtures;
use clarkit::fullerene::validate;
use clarkit::matching::{fries_number, kekule_count};

fn main() {
    let c60 = validate(&fixtures::ih_c60()).unwrap();
    let (fries, r) = fries_number(&c60);
    println!("fries={fries} pentagon-free={}", r.pentagon_free);
    println!("alternating hexagons: {:?}", r.alternating_hexagons);
    println!("matching:\n{}", r.matching);
    println!("Kekulé structures: {}", kekule_count(&c60));
}
