//! Replaces every vertex of K4 by a gadget, completes the result to a 3-regular
//! graph, and shows where the installed edges and padding ended up.

use sepkit::gadget::{reduce, GadgetSpec};
use sepkit::Graph;

fn main() -> sepkit::Result<()> {
    let k4 = Graph::complete(4);
    for spec in [GadgetSpec::new(4, 8, 4), GadgetSpec::new(4, 8, 4).three_regular(true)] {
        let (gstar, map) = reduce(&k4, &spec)?;
        println!(
            "three_regular={}: {} vertices, {} edges, max degree {}, 3-regular {}",
            spec.three_regular,
            gstar.n(),
            gstar.m(),
            gstar.max_degree(),
            gstar.is_k_regular(3)
        );
        println!("  stage {:?}, {} installed edges, {} pairing edges, {} padding vertices",
            map.stage, map.installed.len(), map.pairing_edges.len(), map.padding.len());
        for e in map.installed.iter().take(3) {
            println!("  original {:?} -> {:?}", e.original, e.endpoints);
        }
    }

    // Each original edge twice, on distinct outlet pairs.
    let (doubled, map) = reduce(&Graph::complete(4), &GadgetSpec::new(2, 16, 8).doubled(true))?;
    println!("doubled: {} vertices, {} installed edges", doubled.n(), map.installed.len());
    Ok(())
}
