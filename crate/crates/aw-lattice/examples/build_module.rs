//! Build a DAHA module of the odd family, verify the defining relations of
//! both algebras exactly, and print the generator matrices.
//!
//! Run with: cargo run --example build_module

use aw_lattice::daha::{build, Family, HParams};
use aw_lattice::report::matrix_json;
use aw_lattice::scalar::{frac, int, QContext};

fn main() {
    let ctx = QContext::default_q(); // q = 2
    let params = HParams {
        family: Family::E,
        d: 3,
        // The family constraint forces k0^2 = q^{-d-1} = 1/16.
        k: [frac(1, 4), int(3), frac(2, 7), int(5)],
    };
    params.validate(&ctx).expect("parameters satisfy the family constraint");

    let h = build(&params, &ctx).expect("module builds");
    println!("dimension: {}", h.dim());

    let rel = h.check_relations(&ctx);
    println!("generator inverses consistent: {}", rel.inverses);
    println!("c_i = t_i + t_i^-1 central:    {}", rel.central);
    println!("t0 t1 t2 t3 = q^-1:            {}", rel.product);

    let aw = h.pullback(&ctx);
    let aw_rel = aw.check_relations(&ctx);
    println!("pullback defining relations:   {:?}", aw_rel.defining);
    println!("alpha, beta, gamma central:    {}", aw_rel.central);

    // The Casimir image has a closed form; both sides are exact matrices.
    assert_eq!(aw.casimir(&ctx), h.casimir_image(&ctx));
    println!("Casimir image identity:        true");

    println!("\nt0 =");
    for row in matrix_json(&h.t[0]) {
        println!("  [{}]", row.join(", "));
    }
    println!("A (pullback) =");
    for row in matrix_json(&aw.a) {
        println!("  [{}]", row.join(", "));
    }
}
