//! Exact error growth on the two worst-case matrices.

use zforcing::matrices::{self, rational};
use zforcing::reconstruct;

fn main() -> zforcing::Result<()> {
    println!("doubling path, seed error at the far end:");
    for n in [3, 5, 7, 9, 11, 13] {
        let r = reconstruct::path_tightness(n)?;
        println!("  n = {n:<2}  |x1 - x^1| / eps = {:<4}  q_1(2) = {:<8}  ratio {}", r.observed_factor, r.bound_factor, r.ratio());
    }

    println!("\ncomplete graph, vertex 1 coupled by delta, every reading off by +eps:");
    let eps = rational(1, 1);
    for (n, d) in [(5, 100), (5, 10), (8, 100)] {
        let delta = rational(1, d);
        let err = reconstruct::kn_tightness(n, &delta, &eps)?;
        let kappa = matrices::kn_counterexample(n, delta.clone())?.kappa_prime();
        println!("  n = {n}  delta = {delta:<5}  kappa' = {kappa:<4}  |x1 - x^1| / eps = {err}");
    }
    Ok(())
}
