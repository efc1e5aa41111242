//! Compares the branch-and-bound solver with the exhaustive oracle on every
//! connected graph with up to six vertices.

use sepkit::catalog::connected_graphs;
use sepkit::solver::{brute_force_oracle, solve_min_separator};
use sepkit::{Problem, SolverConfig};

fn main() -> sepkit::Result<()> {
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 1..=6 {
        for g in connected_graphs(n)? {
            for problem in [Problem::VertexBalanced, Problem::SubgraphBalanced] {
                for alpha in ["3/5", "2/3", "3/4"] {
                    let cfg = SolverConfig::new(problem, alpha.parse()?);
                    let fast = solve_min_separator(&g, &cfg)?;
                    let slow = brute_force_oracle(&g, &cfg)?;
                    checked += 1;
                    if (fast.status, fast.separator_size) != (slow.status, slow.separator_size) {
                        mismatches += 1;
                        println!("mismatch on {:?} ({problem}, {alpha})", g.edges());
                    }
                }
            }
        }
    }
    println!("{checked} comparisons, {mismatches} mismatches");
    Ok(())
}
