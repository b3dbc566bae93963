//! Finds every extremal isomer of a given order and splits them by the
//! composite units their pentagons form.
//!
//! cargo run --release --example extremal_census -- 60

use clarkit::census::{census_breakdown, write_breakdown, write_extremal, IsomerCatalog};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(60);
    let started = std::time::Instant::now();
    let mut catalog = IsomerCatalog::enumerate(n).expect("enumeration failed");
    catalog.analyze();
    let census = catalog.extremal();
    println!("isomers={} extremal={}", catalog.len(), census.len());
    let stdout = std::io::stdout();
    write_extremal(&census, stdout.lock()).unwrap();
    write_breakdown(&census_breakdown(&census), stdout.lock()).unwrap();
    eprintln!("done in {:.2?}", started.elapsed());
}
