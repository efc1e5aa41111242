//! Exact minimum balanced separators for a few small graphs, both problems.

use std::time::Duration;

use sepkit::generate::random_cubic;
use sepkit::solver::{decide, solve_min_separator, verify_certificate};
use sepkit::{Graph, Problem, SolverConfig};

fn main() -> sepkit::Result<()> {
    let graphs = [
        ("C6", Graph::cycle(6)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("K4", Graph::complete(4)),
        ("Q3", Graph::hypercube(3)),
        ("cubic-16", random_cubic(16, 1)?),
    ];
    for (name, g) in &graphs {
        for problem in [Problem::VertexBalanced, Problem::SubgraphBalanced] {
            let cfg = SolverConfig::new(problem, "3/4".parse()?);
            let out = solve_min_separator(g, &cfg)?;
            if let Some(p) = &out.partition {
                assert!(verify_certificate(g, p, &cfg).is_valid());
            }
            println!("{name:>8} {problem:<17} {}", out.to_json());
        }
    }

    let c6 = Graph::cycle(6);
    let cfg = SolverConfig::new(Problem::SubgraphBalanced, "3/5".parse()?);
    for k in 1..=2 {
        println!("C6 separator of size <= {k}? {:?}", decide(&c6, &cfg, k)?);
    }

    let big = random_cubic(40, 3)?;
    let cfg = SolverConfig::new(Problem::SubgraphBalanced, "51/100".parse()?)
        .with_time_budget(Duration::from_millis(50));
    let out = solve_min_separator(&big, &cfg)?;
    println!("cubic-40 with a 50ms budget: {:?} after {} nodes", out.status, out.nodes_explored);
    Ok(())
}
