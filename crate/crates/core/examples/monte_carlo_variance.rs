//! Monte Carlo check of the variance bound on one sampled matrix, for both
//! chains of the fork graph and three noise laws.

use zforcing::forcing::ForcingChain;
use zforcing::graph::{self, Graph};
use zforcing::reconstruct::{self, NoiseDist, VarianceConfig};

fn main() -> zforcing::Result<()> {
    let trials = std::env::args().nth(1).map_or(100_000, |a| a.parse().expect("trials must be an integer"));
    let g = Graph::fig3_fork();
    let s = graph::parse_vertex_set("1,3,5")?;
    for by in [8, 1] {
        let chain = ForcingChain::from_forces(&g, &s, &[(5, 8), (3, 6), (6, 2), (by, 7), (7, 4)])?;
        for noise in [NoiseDist::Uniform, NoiseDist::Gaussian, NoiseDist::Rademacher] {
            let cfg = VarianceConfig { trials, epsilon: 1e-4, seed: 11, noise, ..Default::default() };
            let r = reconstruct::verify_variance(&g, &chain, cfg)?;
            let v = r.variance.as_ref().expect("variance mode");
            println!("7 forced by {by}, {noise}: kappa' = {:.3}, {}", v.kappa, if r.passed() { "pass" } else { "FAIL" });
            for st in &v.per_vertex {
                println!(
                    "  vertex {}: sample {:.3e}  exact {:.3e}  bound {:.3e}  z(mean) {:+.2}",
                    st.vertex, st.sample, st.exact, st.bound, st.z_mean
                );
            }
        }
    }
    Ok(())
}
