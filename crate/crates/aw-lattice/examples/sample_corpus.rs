//! Seeded sampling and the verification batteries: draw replayable
//! instances, then run a small sweep of the corpus checks.
//!
//! Run with: cargo run --example sample_corpus

use aw_lattice::sample::{sample_many, SampleMode};
use aw_lattice::scalar::QContext;
use aw_lattice::verify::{run_verification, Scope};

fn main() {
    let ctx = QContext::default_q();

    // Deterministic instances; the seed is recorded in each spec.
    let specs = sample_many("O", 4, 0, 3, SampleMode::DegenerateK(0), 7, &ctx).unwrap();
    for spec in &specs {
        println!(
            "O d=4 k0^2=1 sample: k = [{}]",
            spec.parameters.join(", ")
        );
    }

    let violating = sample_many("E", 3, 0, 2, SampleMode::Violate, 7, &ctx).unwrap();
    for spec in &violating {
        println!("E d=3 violating sample: k = [{}]", spec.parameters.join(", "));
    }

    // A quick end-to-end sweep (1 sample per case, degrees up to 3).
    println!();
    for r in run_verification(Scope::All, 1, 3, 7, &ctx) {
        println!("{}", r.line());
    }
}
