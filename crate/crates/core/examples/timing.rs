use std::time::Instant;

use genchar_core::catalog::catalog_entry;
use genchar_core::generic_minimal_polynomial;

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "m3q".into());
    let entry = catalog_entry(&id).expect("catalog id");
    let t = Instant::now();
    let g = generic_minimal_polynomial(&entry.spec).expect("generic");
    println!("{id}: degree {} in {:?}", g.degree(), t.elapsed());
    println!("{g}");
}
