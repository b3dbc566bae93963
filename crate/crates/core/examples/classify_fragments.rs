//! Pentagon components of an n=60 isomer with their classes, boundary
//! labelings and Clar sets, then the fragment-based extremality verdict.
//!
//! cargo run --release --example classify_fragments -- 43

use clarkit::clar::is_extremal;
use clarkit::fixtures::EXTREMAL_C60;
use clarkit::fragment::{
    boundary_labeling, classify_fragment, gamma, pentagon_components, theorem2_classify,
};
use clarkit::spiral::{from_pentagon_positions, from_spiral};

fn main() {
    let index: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(43);
    let (_, pos) = EXTREMAL_C60
        .iter()
        .find(|(i, _)| *i == index)
        .unwrap_or_else(|| panic!("isomer {index} is not one of the extremal fixtures"));
    let f = from_spiral(&from_pentagon_positions(60, pos)).unwrap();
    for g in pentagon_components(&f) {
        let c = classify_fragment(&f, &g).unwrap();
        let labeling = boundary_labeling(&g)
            .map(|l| l.to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "{:<7} faces={:?} gamma={} labeling={} clar set={:?} uncovered={}",
            c.tag.to_string(),
            g.faces(),
            gamma(&f, &g),
            labeling,
            c.clar_set.hexagons,
            c.clar_set.uncovered.len()
        );
    }
    let r = theorem2_classify(&f).unwrap();
    println!(
        "class {}; criterion extremal={}, Clar solver extremal={}",
        r.census_class(),
        r.extremal,
        is_extremal(&f)
    );
    println!(
        "joint Clar set {:?}, complement tiling {:?}",
        r.clar_set, r.complement
    );
}
