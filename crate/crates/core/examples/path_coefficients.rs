//! Error polynomials of a path read from one end. Coefficient `r` from the
//! top of `q_k` is `C(k−1−r, r)`.

use zforcing::errorvec;
use zforcing::Graph;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn main() -> zforcing::Result<()> {
    let n = std::env::args().nth(1).map_or(15, |a| a.parse().expect("n must be an integer"));
    let g = Graph::path(n);
    let (q, _) = errorvec::error_vector_of_set(&g, &[1].into_iter().collect())?;
    for (k, p) in q.iter() {
        let ok = (0..k).all(|r| p.coeff(k - 1 - r) == binomial(k - 1 - r, r).into());
        println!("q_{k:<2} = {p:<60} {}", if ok { "binomial ok" } else { "MISMATCH" });
    }
    Ok(())
}
