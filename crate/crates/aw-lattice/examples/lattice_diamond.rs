//! Compute the complete submodule lattice of a pulled-back module whose
//! lattice is a diamond, identify every composition factor, and print the
//! Graphviz rendering.
//!
//! Run with: cargo run --example lattice_diamond

use aw_lattice::daha::{build, Family, HParams};
use aw_lattice::report::lattice_dot;
use aw_lattice::scalar::{frac, int, QContext};
use aw_lattice::verdict::verify_instance;

fn main() {
    let ctx = QContext::default_q();
    let params = HParams {
        family: Family::E,
        d: 3,
        k: [frac(1, 4), int(3), frac(2, 7), int(5)],
    };
    let h = build(&params, &ctx).expect("module builds");
    let verdict = verify_instance(&h, &ctx).expect("pipeline completes");

    println!("shape:   {}", verdict.lattice.shape);
    println!("verdict: {}", verdict.status);
    for (i, node) in verdict.lattice.nodes.iter().enumerate() {
        println!("node {i}: dim {}", node.dim());
    }
    for f in &verdict.factors {
        println!(
            "factor over cover {:?} ({:?}): {}  traces={} intertwiner={}",
            f.cover,
            f.role,
            f.model_string(),
            f.traces_match,
            f.intertwiner_found
        );
    }

    println!("\n{}", lattice_dot(&verdict.lattice, Some(&verdict.factors)));
}
