//! The fork graph: each entry of V^S is attained by some chain, but no single
//! chain attains all of them.

use zforcing::errorvec;
use zforcing::forcing::ForcingChain;
use zforcing::graph::{self, Graph};

fn main() -> zforcing::Result<()> {
    let g = Graph::fig3_fork();
    let s = graph::parse_vertex_set("1,3,5")?;

    // Vertex 7 has two possible forcers; everything else is forced the same way.
    for by in [8, 1] {
        let chain = ForcingChain::from_forces(&g, &s, &[(5, 8), (3, 6), (6, 2), (by, 7), (7, 4)])?;
        let alpha = errorvec::alpha_vector_of_chain(&g, &chain);
        let v = errorvec::variance_vector_of_chain(&g, &chain);
        println!("7 forced by {by}:");
        for k in [4, 7] {
            println!("  q_{k} = {:<28} V_{k} = {}", alpha[k - 1].to_string(), v.get(k));
        }
    }

    let sv = errorvec::variance_vector_of_set(&g, &s, 1000)?;
    println!("\nentrywise minimum over {} chains:", sv.chains.len());
    for (k, p) in sv.v.iter() {
        let w = sv.witness_of(k);
        println!("  V_{k} = {:<26} (7 forced by {:?})", p.to_string(), w.forcer_of(7));
    }
    println!("single chain attains every entry: {}", sv.single_chain_achieves());
    Ok(())
}
