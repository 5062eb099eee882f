//! A Chebotarev model read from JSON: the 2-dimensional representation of
//! S3, a dihedral Artin representation. The fourth moment of its traces is
//! the pole order fed to the `m`-bound.
//!
//! ```sh
//! cargo run --example custom_model
//! ```

use lacuna::bounds::thm_c_bound;
use lacuna::density::{model_density, SetMode, SetSpec};
use lacuna::sources::ChebotarevModel;

const S3: &str = r#"{
  "name": "S3 standard",
  "order": 6,
  "classes": [
    {"name": "1", "size": 1, "trace_re": 2, "elt_order": 1},
    {"name": "(12)", "size": 3, "trace_re": 0, "elt_order": 2},
    {"name": "(123)", "size": 2, "trace_re": -1, "elt_order": 3}
  ]
}"#;

fn main() {
    let model = ChebotarevModel::from_json(S3).unwrap();
    let m = model.fourth_moment();
    println!(
        "{}: dimension {}, E|tr|^4 = {m}",
        model.name,
        model.dimension()
    );
    for gamma in [0.0, 1.0, 2.0] {
        let level = SetSpec::abs(SetMode::AbsEquals, gamma);
        let off = level.complement();
        println!(
            "gamma = {gamma}: density of |tr| = gamma is {}, of |tr| != gamma is {} >= {:.4}",
            model_density(&model, &level).unwrap(),
            model_density(&model, &off).unwrap(),
            thm_c_bound(m, gamma).unwrap().value,
        );
    }
    println!("\nround trip:\n{}", model.to_json());
}
