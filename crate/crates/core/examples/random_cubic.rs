//! Draws a few random connected cubic graphs and round-trips them through the
//! edge-list format.
//!
//! ```text
//! cargo run --example random_cubic -- 20 7
//! ```

use sepkit::format::{parse_graph, serialize_graph};
use sepkit::generate::random_cubic;

fn main() -> sepkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(20, |s| s.parse().expect("n must be an integer"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed must be an integer"));

    for offset in 0..3 {
        let g = random_cubic(n, seed + offset)?;
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text)?, g);
        println!(
            "seed {:>3}: n={} m={} degree sum={} connected={} cubic={}",
            seed + offset,
            g.n(),
            g.m(),
            degree_sum,
            g.is_connected(),
            g.is_k_regular(3)
        );
    }

    // Same seed, same graph.
    assert_eq!(random_cubic(n, seed)?, random_cubic(n, seed)?);
    println!("\n{}", serialize_graph(&random_cubic(n, seed)?));
    Ok(())
}
