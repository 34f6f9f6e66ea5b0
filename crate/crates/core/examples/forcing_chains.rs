//! Colors a set round by round, then lists every forcing chain it admits.

use zforcing::forcing;
use zforcing::graph::{self, Graph};

fn main() -> zforcing::Result<()> {
    let g = Graph::fig1_grid9();
    let s = graph::parse_vertex_set("1,6,9")?;

    let trace = forcing::closure(&g, &s)?;
    for (r, colored) in trace.rounds().iter().enumerate() {
        println!("after round {r}: {colored:?}");
    }

    let chains = forcing::enumerate_forcing_chains(&g, &s, 1000)?;
    println!("\n{} forcing chains:", chains.len());
    for c in &chains {
        let forces: Vec<String> = c.forces().iter().map(|f| format!("{}->{}", f.by, f.on)).collect();
        println!("  pt {}  {}", c.propagation_time(), forces.join(" "));
        println!("    paths {:?}", c.paths());
    }
    Ok(())
}
