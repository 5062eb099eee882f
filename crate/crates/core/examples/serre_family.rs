//! Groups of order `r^3` acting on `C^r`: the trace vanishes off the
//! centre, so the zero-trace density is `1 - 1/r^2`. Exact densities come
//! from the class data, sampled ones from seeded Chebotarev draws.
//!
//! ```sh
//! cargo run --release --example serre_family
//! ```

use lacuna::bounds::serre_bound;
use lacuna::density::{classify, model_density, SetMode, SetSpec};
use lacuna::sources::serre_group_model;

fn main() {
    let zero = SetSpec::abs(SetMode::AbsEquals, 0.0);
    let draws = 100_000;
    println!("r   classes  E|tr|^4  exact   bound   sampled   z");
    for r in [2, 3, 5, 7] {
        let model = serre_group_model(r).unwrap();
        let exact = model_density(&model, &zero).unwrap();
        let stream = model.sample(draws, 2024, &format!("serre:{r}"));
        let m = classify(&stream, &zero).unwrap();
        let sampled = m.count() as f64 / m.len() as f64;
        let p = 1.0 - 1.0 / (r * r) as f64;
        let z = (sampled - p) / (p * (1.0 - p) / draws as f64).sqrt();
        println!(
            "{r}   {:>7}  {:>7}  {:<6}  {:<6}  {sampled:.5}  {z:+.2}",
            model.classes.len(),
            model.fourth_moment(),
            exact.to_string(),
            serre_bound(r).unwrap().to_string(),
        );
    }
}
