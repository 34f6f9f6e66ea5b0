//! Three zero forcing sets of the same 9-vertex graph, ranked by the largest
//! entry of their error and variance polynomial vectors.

use zforcing::errorvec;
use zforcing::graph::{self, Graph};

fn main() -> zforcing::Result<()> {
    let g = Graph::fig1_grid9();
    println!("{:<10} {:>3}  {:<22} {}", "set", "pt", "max q", "max V");
    for s in graph::parse_vertex_sets("2,6,9;1,6,9;1,4,7")? {
        let (q, chain) = errorvec::error_vector_of_set(&g, &s)?;
        let v = errorvec::variance_vector_of_set(&g, &s, 10_000)?;
        let label = format!("{s:?}");
        println!("{:<10} {:>3}  {:<22} {}", label, chain.propagation_time(), q.max_entry().1.to_string(), v.v.max_entry().1);
    }

    // Same propagation time, different polynomials: the middle set has the
    // smallest worst-case error even though its max V is larger than the first.
    let s = graph::parse_vertex_set("1,6,9")?;
    let (q, _) = errorvec::error_vector_of_set(&g, &s)?;
    println!("\nq for {{1,6,9}}:");
    for (k, p) in q.iter() {
        println!("  q_{k} = {p}   (at t = 2: {})", p.eval(2.0));
    }
    Ok(())
}
