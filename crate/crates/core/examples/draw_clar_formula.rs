//! Writes an SVG of a Clar formula of Ih C60: circles in the sextets and
//! double lines for the matching.
//!
//! cargo run --release --example draw_clar_formula -- c60.svg

use clarkit::clar::clar_number;
use clarkit::fixtures;
use clarkit::fullerene::validate;
use clarkit::svg::render;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "c60-clar.svg".into());
    let c60 = validate(&fixtures::ih_c60()).unwrap();
    let r = clar_number(&c60);
    let p = &r.formulas[0];
    std::fs::write(&path, render(&c60, &p.hexagons, Some(&p.witness), &[]))
        .expect("cannot write svg");
    println!("wrote {path}: {} sextets", p.hexagons.len());
}
