//! Zero forcing number, every minimum set and its propagation time.
//!
//! ```text
//! cargo run --example min_zfs                      # K6 minus two disjoint edges
//! cargo run --example min_zfs -- forked_path 7
//! cargo run --example min_zfs -- graph.txt         # edge-list file
//! ```

use zforcing::forcing::{self, SearchLimits};
use zforcing::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g = match args.first().map(String::as_str) {
        None => Graph::complete_minus_two_disjoint_edges(6)?,
        Some(path) if std::path::Path::new(path).is_file() => Graph::parse_edge_list(&std::fs::read_to_string(path)?)?,
        Some(name) => Graph::builtin(name, args.get(1).map(|n| n.parse()).transpose()?)?,
    };
    println!("{} vertices, {} edges, max degree {}", g.order(), g.size(), g.max_degree());

    let m = forcing::minimum_zero_forcing_sets(&g, SearchLimits::default())?;
    println!("Z(G) = {}", m.zero_forcing_number);
    for s in &m.sets {
        println!("  {:?}  pt = {}", s, forcing::propagation_time(&g, s)?);
    }
    Ok(())
}
