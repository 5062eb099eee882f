//! Frobenius traces of the Q8 Galois representation: a quarter of the
//! primes split completely (trace +-2) and three quarters have trace zero,
//! so the `m = 4` bound and Serre's `r = 2` bound are both attained.
//!
//! ```sh
//! cargo run --release --example q8_sharpness -- 1000000
//! ```

use lacuna::bounds::{BoundArgs, BoundKind, BoundRecord};
use lacuna::density::{estimate_density, verify_bound, EstimateOptions, SetMode, SetSpec};
use lacuna::sources::Q8Source;

fn main() {
    let limit = std::env::args()
        .nth(1)
        .map_or(200_000, |a| a.parse().expect("limit"));
    let source = Q8Source::default_polynomial();
    println!("{} (discriminant {})", source.id(), source.discriminant);
    let (stream, orders) = source.eigenvalues(limit).unwrap();
    let [o1, o2, o4] = orders.frequencies();
    println!(
        "{} unramified primes <= {limit}; Frobenius orders 1/2/4: {o1:.4} {o2:.4} {o4:.4} (chi^2 {:.2})",
        stream.len(),
        orders.chi_square()
    );

    let zero = SetSpec::abs(SetMode::AbsEquals, 0.0);
    let est = estimate_density(&stream, &zero, &EstimateOptions::default()).unwrap();
    for (kind, args) in [
        (
            BoundKind::Serre,
            BoundArgs {
                r: Some(2),
                ..Default::default()
            },
        ),
        (
            BoundKind::ThmC,
            BoundArgs {
                m: Some(4),
                gamma: Some("0".parse().unwrap()),
                ..Default::default()
            },
        ),
    ] {
        let record = BoundRecord::evaluate(kind, &args).unwrap();
        let report = verify_bound(&stream.source_id, est.clone(), &zero, &record, 0.02).unwrap();
        println!("\n{}", report.to_table());
    }
}
