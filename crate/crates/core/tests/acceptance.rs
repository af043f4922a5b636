//! The full acceptance sweep at shipping scale: one line per criterion.

use mar_core::verify;

#[test]
fn acceptance() {
    let results = verify::run_all(7);
    let mut all = true;
    for c in &results {
        println!("{c}");
        all &= c.pass;
    }
    assert!(all, "acceptance sweep failed");
}
