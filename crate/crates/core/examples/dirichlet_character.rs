//! The quadratic character mod 4: `chi(p) != 1` on half the primes, which
//! meets the bound `|alpha|^2 / (|alpha|^2 + 1)` at `alpha = 1`. Also shows
//! how the Dirichlet ratios behave as `s` approaches 1.
//!
//! ```sh
//! cargo run --release --example dirichlet_character -- 1000000
//! ```

use lacuna::bounds::{BoundArgs, BoundKind, BoundRecord};
use lacuna::density::{
    classify, dirichlet_ratio, estimate_density, verify_bound, EstimateOptions, SetMode, SetSpec,
};
use lacuna::sources::RealCharacter;
use num_complex::Complex64;

fn main() {
    let limit = std::env::args()
        .nth(1)
        .map_or(1_000_000, |a| a.parse().expect("limit"));
    let chi = RealCharacter::new(4, 1).unwrap();
    println!(
        "{} is the Kronecker symbol ({}/.)",
        chi.id(),
        chi.discriminant
    );
    let stream = chi.eigenvalues(limit);
    let set = SetSpec::new(SetMode::ValueNotEquals, Complex64::new(1.0, 0.0));
    let membership = classify(&stream, &set).unwrap();

    println!("\n   s     ratio  relative  reliable");
    for s in [1.25, 1.2, 1.1, 1.05, 1.02, 1.01] {
        let p = dirichlet_ratio(&membership, s).unwrap();
        println!("{s:<6} {:.4}  {:.4}    {}", p.ratio, p.relative, p.reliable);
    }

    let args = BoundArgs {
        alpha: Some("1".into()),
        ..Default::default()
    };
    let record = BoundRecord::evaluate(BoundKind::Propf, &args).unwrap();
    let est = estimate_density(&stream, &set, &EstimateOptions::default()).unwrap();
    let report = verify_bound(&stream.source_id, est, &set, &record, 0.02).unwrap();
    println!("\n{}", report.to_table());
}
