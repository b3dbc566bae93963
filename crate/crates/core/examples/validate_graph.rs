//! Validates a fullerene given as an adjacency file or an inline spiral and
//! reports its faces and cyclic edge connectivity.
//!
//! cargo run --release --example validate_graph -- 5,5,5,5,5,5,5,5,5,5,5,5

use clarkit::fullerene::validate;
use clarkit::graph::{cyclic_edge_connectivity, parse_adjacency};
use clarkit::spiral::{from_spiral, parse_spiral};

fn main() {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5,5,5,5,5,5,5,5,5,5,5,5".into());
    let f = if arg.contains(',') {
        let s = parse_spiral(&arg).unwrap_or_else(|e| panic!("bad spiral: {e}"));
        from_spiral(&s).unwrap_or_else(|e| panic!("not a fullerene: {e}"))
    } else {
        let text = std::fs::read_to_string(&arg).expect("cannot read file");
        let rot = parse_adjacency(&text).unwrap_or_else(|e| panic!("bad adjacency list: {e}"));
        validate(&rot).unwrap_or_else(|e| panic!("not a fullerene: {e}"))
    };
    println!(
        "n={} edges={} pentagons={} hexagons={}",
        f.order(),
        f.edges().len(),
        f.pentagons().len(),
        f.hexagons().len()
    );
    match cyclic_edge_connectivity(f.rotation(), 6) {
        Some(k) => println!("cyclic edge connectivity {k}"),
        None => println!("no cyclic edge cut with at most 6 edges"),
    }
    print!("{}", f.rotation());
}
