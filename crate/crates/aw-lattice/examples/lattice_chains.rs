//! The two chain-shaped lattices: an even-family module with k0 = 1 gives
//! a maximal chain of length four, and a twisted odd-family module with the
//! pinned parameter squared to one gives a chain of length three.
//!
//! Run with: cargo run --example lattice_chains

use aw_lattice::daha::{build, Family, HParams};
use aw_lattice::scalar::{frac, int, QContext};
use aw_lattice::verdict::verify_instance;

fn show(name: &str, params: HParams, twist: u8, ctx: &QContext) {
    let h = build(&params, ctx).expect("module builds").twist_z4(twist);
    let v = verify_instance(&h, ctx).expect("pipeline completes");
    let dims: Vec<usize> = v.lattice.nodes.iter().map(|n| n.dim()).collect();
    println!("{name}: shape {}, node dims {:?}, verdict {}", v.lattice.shape, dims, v.status);
    println!("  t0 diagonalizable: {}", v.summary.diagonalizable);
    for f in &v.factors {
        println!("  {:?} -> {}", f.role, f.model_string());
    }
}

fn main() {
    let ctx = QContext::default_q();

    // Even family, k0 = 1: t0 is not diagonalizable and the lattice is the
    // chain 0 < V(1)' < V(1) < V with V(1)' of codimension one in V(1).
    show(
        "O d=4, k0=1",
        HParams {
            family: Family::O,
            d: 4,
            k: [int(1), int(3), frac(2, 7), frac(7, 192)],
        },
        0,
        &ctx,
    );

    // Twisted odd family with k1^2 = 1: chain 0 < V(theta) < V.
    show(
        "E d=3, eps=1, k1=1",
        HParams {
            family: Family::E,
            d: 3,
            k: [frac(1, 4), int(1), frac(2, 7), int(5)],
        },
        1,
        &ctx,
    );
}
