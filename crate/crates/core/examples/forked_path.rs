//! On the forked path the set minimizing the largest error polynomial is not
//! the one minimizing the largest variance polynomial.

use zforcing::errorvec;
use zforcing::forcing::{self, SearchLimits};
use zforcing::Graph;

fn main() -> zforcing::Result<()> {
    let n = std::env::args().nth(1).map_or(7, |a| a.parse().expect("n must be an integer"));
    let g = Graph::forked_path(n)?;
    let m = forcing::minimum_zero_forcing_sets(&g, SearchLimits::default())?;

    let mut rows = Vec::new();
    for s in &m.sets {
        let (q, _) = errorvec::error_vector_of_set(&g, s)?;
        let v = errorvec::variance_vector_of_set(&g, s, 10_000)?;
        println!("S = {s:?}");
        println!("  q = {:?}", q.to_strings());
        println!("  V = {:?}", v.v.to_strings());
        rows.push((s.clone(), q.max_entry().1.clone(), v.v.max_entry().1.clone()));
    }
    let best_q = rows.iter().min_by(|a, b| a.1.cmp(&b.1)).unwrap();
    let best_v = rows.iter().min_by(|a, b| a.2.cmp(&b.2)).unwrap();
    println!("\nsmallest max q: {:?} with {}", best_q.0, best_q.1);
    println!("smallest max V: {:?} with {}", best_v.0, best_v.2);
    Ok(())
}
