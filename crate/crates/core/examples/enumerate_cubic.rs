//! Counts what the cubic enumerator emits and how many isomorphism classes that covers.

use std::collections::BTreeSet;

use sepkit::catalog::canonical_form;
use sepkit::generate::enumerate_cubic;

fn main() -> sepkit::Result<()> {
    println!("{:>3} {:>9} {:>8}", "n", "emitted", "classes");
    for n in [4, 6, 8, 10] {
        let mut emitted = 0;
        let mut classes = BTreeSet::new();
        for g in enumerate_cubic(n)? {
            emitted += 1;
            classes.insert(canonical_form(&g));
        }
        println!("{n:>3} {emitted:>9} {:>8}", classes.len());
    }
    Ok(())
}
