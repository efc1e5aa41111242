//! Solves small doubled reductions and reports the parity of each optimal separator.

use std::time::Duration;

use sepkit::gadget::{reduce, GadgetSpec};
use sepkit::solver::solve_min_separator;
use sepkit::{Graph, Problem, SolverConfig};

fn main() -> sepkit::Result<()> {
    let spec = GadgetSpec::new(2, 8, 4).doubled(true);
    for three_regular in [false, true] {
        let (gstar, _) = reduce(&Graph::path(2), &spec.three_regular(three_regular))?;
        for problem in [Problem::VertexBalanced, Problem::SubgraphBalanced] {
            let cfg = SolverConfig::new(problem, "3/4".parse()?).with_time_budget(Duration::from_secs(20));
            let out = solve_min_separator(&gstar, &cfg)?;
            println!(
                "K2 doubled, three_regular={three_regular}, {} vertices, {problem}: {:?} |I|={} ({})",
                gstar.n(),
                out.status,
                out.separator_size,
                if out.separator_size % 2 == 0 { "even" } else { "odd" }
            );
        }
    }
    Ok(())
}
