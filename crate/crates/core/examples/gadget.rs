//! Builds one concentric-cycle gadget and prints its degree profile and outlets.
//! Pass `--dot` to print a Graphviz rendering instead.

use sepkit::format::export_dot;
use sepkit::gadget::{build_gadget, GadgetSpec};

fn main() -> sepkit::Result<()> {
    let dot = std::env::args().any(|a| a == "--dot");
    let spec = if dot { GadgetSpec::new(3, 8, 2) } else { GadgetSpec::paper_scale(2) };
    let gadget = build_gadget(&spec)?;
    if dot {
        print!("{}", export_dot(&gadget.graph, None));
        return Ok(());
    }

    let g = &gadget.graph;
    let mut histogram = [0usize; 4];
    for v in 0..g.n() {
        histogram[g.degree(v)] += 1;
    }
    println!("spec: {} rings x {} vertices, {} outlets", spec.cycles, spec.cycle_len, spec.outlets);
    println!("vertices {} edges {} max degree {}", g.n(), g.m(), g.max_degree());
    println!("degree 2: {}  degree 3: {}", histogram[2], histogram[3]);
    for (k, &v) in gadget.outlets.iter().enumerate() {
        let (ring, pos) = gadget.position(v);
        println!("outlet {k}: vertex {v} (ring {ring}, position {pos}, degree {})", g.degree(v));
    }
    Ok(())
}
