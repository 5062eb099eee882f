//! Normalized traces of a non-CM curve follow the Sato-Tate law, whose even
//! moments `E|a|^4, E|a|^6, E|a|^8 = 2, 5, 14` are the pole orders behind
//! the two-moment bound. The level sets `{|a_p| = gamma}` have density zero.
//!
//! ```sh
//! cargo run --release --example sato_tate -- 1000000
//! ```

use lacuna::bounds::{corollary_bound, thm_c_bound};
use lacuna::density::{classify, SetMode, SetSpec};
use lacuna::sources::EllipticCurve;

fn main() {
    let limit = std::env::args()
        .nth(1)
        .map_or(200_000, |a| a.parse().expect("limit"));
    let curve: EllipticCurve = "0,-1,1,-10,-20".parse().unwrap();
    let stream = curve.eigenvalues(limit);
    println!(
        "E = [{curve}] (conductor 11), {} good primes <= {limit}",
        stream.len()
    );

    let n = stream.len() as f64;
    let moment = |k: i32| {
        stream
            .entries
            .iter()
            .map(|e| e.normalized.re.powi(2 * k))
            .sum::<f64>()
            / n
    };
    println!(
        "E|a|^2k for k = 1..4: {:.3} {:.3} {:.3} {:.3}  (Catalan: 1 2 5 14)",
        moment(1),
        moment(2),
        moment(3),
        moment(4)
    );

    // histogram against (1/2pi) sqrt(4 - x^2)
    let bins = 8;
    let mut counts = vec![0usize; bins];
    for e in &stream.entries {
        let x = e.normalized.re.clamp(-2.0, 2.0 - 1e-12);
        counts[((x + 2.0) / 4.0 * bins as f64) as usize] += 1;
    }
    println!("\n  bin            observed  Sato-Tate");
    for (i, c) in counts.iter().enumerate() {
        let (a, b) = (
            -2.0 + 4.0 * i as f64 / bins as f64,
            -2.0 + 4.0 * (i + 1) as f64 / bins as f64,
        );
        let cdf = |x: f64| {
            0.5 + (x * (4.0 - x * x).sqrt() / 2.0 + 2.0 * (x / 2.0).asin())
                / (2.0 * std::f64::consts::PI)
        };
        println!(
            "  [{a:+.1}, {b:+.1})    {:.4}    {:.4}",
            *c as f64 / n,
            cdf(b) - cdf(a)
        );
    }

    println!("\n gamma   |a_p| = gamma  thm-c m=2  corollary");
    for gamma in [0.0, 0.5, 1.0, 1.5] {
        let set = SetSpec::abs(SetMode::AbsEquals, gamma).with_tolerance(1e-9);
        let m = classify(&stream, &set).unwrap();
        println!(
            " {gamma:<5}   {:<13}  {:.4}     {:.4}",
            m.count(),
            thm_c_bound(2, gamma).unwrap().value,
            corollary_bound(gamma).unwrap().value
        );
    }
}
