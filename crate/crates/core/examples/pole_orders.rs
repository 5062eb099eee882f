//! Isobaric decompositions of tensor powers and the pole orders they give.
//!
//! ```sh
//! cargo run --example pole_orders
//! ```

use lacuna::satake::{
    dihedral_tensor, gl3_adjoint_tensor, self_pairing, tensor_power_decompose,
    tensor_power_pole_order, DihedralPair, Gl2Type, Quotient,
};

fn main() {
    let ty = Gl2Type::NonSolvablePolyhedral;
    for k in 1..=4 {
        let rep = tensor_power_decompose(ty, k, k).unwrap();
        let pole = tensor_power_pole_order(ty, k, k).unwrap();
        println!(
            "pi^{k} x pibar^{k}  (dim {:>3})  pole order {pole:>2}",
            rep.dimension()
        );
        if k <= 2 {
            println!("    = {rep}");
        }
    }

    // pi x pibar for a dihedral pi whose quotient character is Galois-invariant
    let dihedral = dihedral_tensor(DihedralPair::Contragredient(Quotient::Invariant));
    println!("\ndihedral pi x pibar = {dihedral}");
    println!("    self-pairing {}", self_pairing(&dihedral).unwrap());

    let gl3 = gl3_adjoint_tensor(ty).unwrap();
    println!("\nAd(pi) x Ad(pi) on GL(3) = {gl3}");
    println!("    self-pairing {}", self_pairing(&gl3).unwrap());
}
