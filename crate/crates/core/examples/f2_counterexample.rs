//! Over GF(2) the columns {1,2,3} of every matrix with the pattern of K6 minus
//! {1,5},{2,6} are independent, yet {4,5,6} is not a zero forcing set.

use zforcing::matrices;

fn main() -> zforcing::Result<()> {
    let r = matrices::f2_counterexample_check()?;
    println!("minor on rows 4,5,6 / cols 1,2,3 nonsingular: {}", r.minor_nonsingular);
    for (mask, rank) in r.column_ranks.iter().enumerate() {
        print!("{mask:06b}:{rank} ");
        if mask % 8 == 7 {
            println!();
        }
    }
    println!("independent for all 64 diagonals: {}", r.independent_for_all_diagonals);
    println!("{{4,5,6}} zero forcing: {}", r.set_456_is_zero_forcing);
    println!("Z(G) = {}", r.zero_forcing_number);
    Ok(())
}
