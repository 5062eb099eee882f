//! `y^2 = x^3 - x` has complex multiplication by `Z[i]`: `a_p = 0` exactly
//! when `p = 3 mod 4`.
//!
//! ```sh
//! cargo run --release --example cm_curve -- 1000000
//! ```

use lacuna::bounds::{BoundArgs, BoundKind, BoundRecord};
use lacuna::density::{
    classify, estimate_density, verify_bound, EstimateOptions, SetMode, SetSpec,
};
use lacuna::sources::EllipticCurve;

fn main() {
    let limit = std::env::args()
        .nth(1)
        .map_or(200_000, |a| a.parse().expect("limit"));
    let curve: EllipticCurve = "0,0,0,-1,0".parse().unwrap();
    println!(
        "E = [{curve}], j = {}, CM: {}",
        curve.j_invariant(),
        curve.has_cm()
    );
    let first: Vec<String> = [3, 5, 7, 11, 13, 17]
        .iter()
        .map(|&p| format!("a_{p} = {}", curve.trace_of_frobenius(p)))
        .collect();
    println!("{}", first.join(", "));

    let stream = curve.eigenvalues(limit);
    let zero = SetSpec::abs(SetMode::AbsEquals, 0.0);
    let membership = classify(&stream, &zero).unwrap();
    let mismatches = membership
        .primes
        .iter()
        .zip(&membership.member)
        .filter(|(p, hit)| **hit != (*p % 4 == 3))
        .count();
    println!("primes where a_p = 0 differs from p = 3 mod 4: {mismatches}");

    let args = BoundArgs {
        m: Some(4),
        gamma: Some("0".parse().unwrap()),
        ..Default::default()
    };
    let record = BoundRecord::evaluate(BoundKind::ThmC, &args).unwrap();
    let est = estimate_density(&stream, &zero, &EstimateOptions::default()).unwrap();
    let report = verify_bound(&stream.source_id, est, &zero, &record, 0.02).unwrap();
    println!("\n{}", report.to_table());
}
