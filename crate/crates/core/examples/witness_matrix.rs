//! For a set that does not force, builds an exact rational matrix with the
//! graph's pattern whose uncolored columns sum to zero.

use zforcing::graph::{self, Graph};
use zforcing::matrices;

fn main() -> zforcing::Result<()> {
    let g = Graph::complete_minus_two_disjoint_edges(6)?;
    let s = graph::parse_vertex_set("4,5,6")?;
    let w = matrices::witness_matrix(&g, &s)?;
    println!("uncolored Y = {:?}", w.uncolored);
    print!("{}", w.matrix.to_csv());
    let sums: Vec<String> = w.column_sums().iter().map(ToString::to_string).collect();
    println!("A[:,Y]·1 = [{}]", sums.join(", "));
    println!("rank A[:,Y] = {} < |Y| = {}", w.uncolored_rank(), w.uncolored.len());

    let p = Graph::random_connected(8, 0.3, 42);
    let s = graph::parse_vertex_set("1")?;
    if let Ok(w) = matrices::witness_matrix(&p, &s) {
        println!("\nrandom graph {:?}\nfrom {{1}}: Y = {:?}, json {}", p.edges().collect::<Vec<_>>(), w.uncolored, w.matrix.to_json());
    }
    Ok(())
}
