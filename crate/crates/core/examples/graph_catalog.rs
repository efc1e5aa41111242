//! Connected graphs up to isomorphism, built by one-vertex extension and
//! deduplicated by canonical form.

use sepkit::catalog::connected_graphs;

fn main() -> sepkit::Result<()> {
    let max_n: usize = std::env::args().nth(1).map_or(7, |s| s.parse().expect("n must be an integer"));
    for n in 1..=max_n {
        let graphs = connected_graphs(n)?;
        let edges: Vec<usize> = graphs.iter().map(|g| g.m()).collect();
        println!(
            "n={n}: {} connected graphs, edge counts {}..={}",
            graphs.len(),
            edges.iter().min().unwrap(),
            edges.iter().max().unwrap()
        );
    }
    Ok(())
}
