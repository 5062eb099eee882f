//! Density bounds as functions of gamma, and the exact values at rational
//! inputs.
//!
//! ```sh
//! cargo run --example bounds
//! ```

use lacuna::bounds::{
    corollary_bound, optimal_c, propf_exact, serre_bound, thm_c_bound, thm_c_exact, thm_d_bound,
    thm_d_exact,
};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    println!("lower bounds for the density of {{p : |a_p| != gamma}}\n");
    println!("gamma   thm-c m=2  thm-c m=4  thm-d (14,5)  corollary  optimal c");
    for i in 0..=8 {
        let g = 0.25 * f64::from(i);
        let opt = optimal_c(14, 5, g).unwrap();
        println!(
            "{g:<6.2}  {:>9.5}  {:>9.5}  {:>12.5}  {:>9.5}  {:>9.4}",
            thm_c_bound(2, g).unwrap().value,
            thm_c_bound(4, g).unwrap().value,
            thm_d_bound(14, 5, g).unwrap().value,
            corollary_bound(g).unwrap().value,
            opt.c,
        );
    }

    let u = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    println!("\nexact values");
    println!(
        "  thm-c m=4, gamma^2 = 4      {}",
        thm_c_exact(4, &u(4, 1)).unwrap().value
    );
    println!(
        "  thm-d (14,5), gamma = 0     {}",
        thm_d_exact(14, 5, &u(0, 1)).unwrap().value
    );
    println!(
        "  thm-d (14,5), gamma^2 = 1/2 {}",
        thm_d_exact(14, 5, &u(1, 2)).unwrap().value
    );
    println!(
        "  propf |alpha|^2 = 1         {}",
        propf_exact(&u(1, 1)).unwrap().value
    );
    for r in [2, 3, 5, 7] {
        println!(
            "  serre r = {r}                 {}",
            serre_bound(r).unwrap()
        );
    }
}
