//! Checks hand-written partitions, printing the reasons a certificate is rejected.

use sepkit::format::parse_partition;
use sepkit::solver::verify_certificate;
use sepkit::{Graph, Problem, SolverConfig};

fn main() -> sepkit::Result<()> {
    let cases = [
        ("C6", Graph::cycle(6), "I: 0 3\nV1: 1 2\nV2: 4 5\n", Problem::SubgraphBalanced, "3/5"),
        ("C6", Graph::cycle(6), "I: 0 1\nV1: 2 3 4\nV2: 5\n", Problem::SubgraphBalanced, "3/5"),
        ("K4", Graph::complete(4), "I: 0\nV1: 1\nV2: 2 3\n", Problem::VertexBalanced, "3/4"),
        ("P5", Graph::path(5), "I: 1\nV1: 0\nV2: 2 3 4\n", Problem::VertexBalanced, "3/5"),
    ];
    for (name, g, text, problem, alpha) in cases {
        let p = parse_partition(text, g.n())?;
        let check = verify_certificate(&g, &p, &SolverConfig::new(problem, alpha.parse()?));
        println!("{name} {} [{problem} at {alpha}]", text.replace('\n', " ").trim_end());
        if check.is_valid() {
            println!("  valid");
        }
        for reason in &check.reasons {
            println!("  {reason}");
        }
    }
    Ok(())
}
