//! Clar number and every Clar formula of Ih C60, checked against the
//! exhaustive oracle on a smaller isomer.
//!
//! cargo run --release --example clar_formulas

use clarkit::clar::{clar_brute_force, clar_number, clar_value};
use clarkit::enumerate::enumerate;
use clarkit::fixtures;
use clarkit::fullerene::validate;

fn main() {
    let c60 = validate(&fixtures::ih_c60()).unwrap();
    let r = clar_number(&c60);
    println!(
        "C60: clar={} bound={} extremal={}",
        r.clar_number, r.bound, r.extremal
    );
    for (i, p) in r.formulas.iter().enumerate() {
        println!("  formula {}: hexagons {:?}", i + 1, p.hexagons);
    }

    for iso in enumerate(32).unwrap() {
        let fast = clar_value(&iso.graph);
        let slow = clar_brute_force(&iso.graph).unwrap();
        println!("C32 isomer: branch and bound {fast}, exhaustive {slow}");
    }
}
