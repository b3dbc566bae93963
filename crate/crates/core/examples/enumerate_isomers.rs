//! Enumerates all fullerene isomers of a given order and prints their
//! canonical spirals as pentagon positions.
//!
//! cargo run --release --example enumerate_isomers -- 40

use clarkit::enumerate::enumerate;
use clarkit::spiral::pentagon_positions;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("order must be an integer"))
        .unwrap_or(40);
    let started = std::time::Instant::now();
    let isomers = enumerate(n).expect("enumeration failed");
    for iso in &isomers {
        let pos: Vec<String> = pentagon_positions(&iso.spiral)
            .iter()
            .map(|p| p.to_string())
            .collect();
        println!("{}", pos.join(" "));
    }
    eprintln!(
        "C{n}: {} isomers in {:.2?}",
        isomers.len(),
        started.elapsed()
    );
}
