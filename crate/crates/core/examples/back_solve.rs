//! One reconstruction by hand: sample a matrix, read three entries of its
//! null vector with error, and recover the rest along the greedy chain.

use zforcing::forcing;
use zforcing::graph::{self, Graph};
use zforcing::matrices::{self, SamplerOptions};
use zforcing::reconstruct::{self, Measurement};

fn main() -> zforcing::Result<()> {
    let g = Graph::fig1_grid9();
    let s = graph::parse_vertex_set("1,6,9")?;
    let a = matrices::sample_with_null_vector(&g, 3, SamplerOptions::default())?;
    let x = a.known_null().expect("sampler attaches x").to_vec();
    println!("kappa' = {:.4}", a.kappa_prime());

    let (chain, _) = forcing::greedy_chain(&g, &s)?;
    let eps = 1e-3;
    let m = Measurement::from_truth(&x, &s, eps, |i| if i % 2 == 0 { eps } else { -eps })?;
    let r = reconstruct::back_solve(&a, &chain, &m)?;
    println!("{:>3} {:>10} {:>10} {:>10} {:>10} {:>10}", "k", "x", "x^", "|err|", "q(k')e", "coarse");
    for k in 1..=g.order() {
        println!(
            "{k:>3} {:>10.6} {:>10.6} {:>10.2e} {:>10.2e} {:>10.2e}",
            x[k - 1],
            r.x_hat[k - 1],
            (x[k - 1] - r.x_hat[k - 1]).abs(),
            r.error_bound[k - 1],
            r.coarse_bound[k - 1]
        );
    }
    Ok(())
}
