//! Where the two-moment bound for `(m, m') = (14, 5)` meets the single
//! moment bound for `m = 2`.
//!
//! ```sh
//! cargo run --example crossover
//! ```

use lacuna::bounds::{crossover_gammas, quoted_crossover_gammas, Crossover};

fn main() {
    match crossover_gammas(14, 5, 2).unwrap() {
        Crossover::Identical => println!("the bounds agree everywhere"),
        Crossover::Points(points) => {
            for p in points {
                let g2 = p.gamma * p.gamma;
                println!(
                    "gamma = {:.12}  {:?}  gamma^4 - 3 gamma^2 + 1 = {:.1e}",
                    p.gamma,
                    p.kind,
                    g2 * g2 - 3.0 * g2 + 1.0
                );
            }
        }
    }
    println!("\nvalues quoted as +-(1/2) sqrt(3 +- sqrt 5):");
    for g in quoted_crossover_gammas() {
        let t = 2.0 * g * g;
        println!(
            "  {g:+.12}  (2 gamma^2)^2 - 3 (2 gamma^2) + 1 = {:.1e}",
            t * t - 3.0 * t + 1.0
        );
    }
}
