//! Lists the pentagonal rings of every isomer of a given order and builds
//! the catalogue templates by pasting.
//!
//! cargo run --release --example pentagonal_rings -- 40

use clarkit::enumerate::enumerate;
use clarkit::fragment::{catalogue, detect_pentagonal_rings, paste, Template};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40);
    for (i, iso) in enumerate(n).unwrap().iter().enumerate() {
        let rings = detect_pentagonal_rings(&iso.graph);
        let sizes: Vec<usize> = rings.iter().map(|r| r.k()).collect();
        println!("isomer {}: rings {:?}", i + 1, sizes);
    }
    for (tag, t) in catalogue() {
        println!(
            "{tag}: {} faces, {} vertices",
            t.face_count(),
            t.vertex_count()
        );
    }
    let p = Template::pentagon();
    let p2 = paste(&p, (0, 0), &p, (0, 0)).unwrap();
    println!("P*P has {} vertices", p2.vertex_count());
}
