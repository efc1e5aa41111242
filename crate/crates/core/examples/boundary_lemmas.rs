//! Edge-count identities on cubic graphs: the per-side residual
//! `3V_i - (2E_i + E_i^I)` over every partition, and the boundary counts
//! `β1 + β2 = 3|I|`, `|I| <= β_i <= 2|I|` over the nice ones.

use sepkit::generate::enumerate_cubic;
use sepkit::separator::{boundary_stats, is_nice, lemma1_check, lemma2_check};
use sepkit::solver::for_each_partition;

fn main() -> sepkit::Result<()> {
    for n in [4, 6, 8, 10] {
        let (mut partitions, mut nonzero, mut nice, mut bad) = (0, 0, 0, 0);
        for g in enumerate_cubic(n)? {
            for_each_partition(&g, 4, false, |p| {
                partitions += 1;
                if lemma1_check(&g, p).unwrap() != [0, 0] {
                    nonzero += 1;
                }
                if is_nice(&g, p).unwrap().is_nice() {
                    nice += 1;
                    let stats = boundary_stats(&g, p).unwrap();
                    let same = stats.sides.iter().all(|s| s.separator_edges == s.boundary);
                    if !lemma2_check(&g, p).unwrap().holds() || !same {
                        bad += 1;
                    }
                }
            })?;
        }
        println!("n={n:>2}: {partitions:>6} partitions, {nonzero} nonzero residuals, {nice:>4} nice, {bad} boundary failures");
    }
    Ok(())
}
