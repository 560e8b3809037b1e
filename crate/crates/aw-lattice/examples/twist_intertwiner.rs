//! Twist identities: the parameter-swap twist of a bidiagonal module is
//! isomorphic to the module with the first two parameters exchanged, and
//! four quarter-twists of a DAHA module compose to the identity.
//!
//! Run with: cargo run --example twist_intertwiner

use aw_lattice::aw::{build_vd, find_intertwiner, AwParams};
use aw_lattice::daha::{build, Family, HParams};
use aw_lattice::scalar::{frac, int, QContext};

fn main() {
    let ctx = QContext::default_q();

    // Swap twist on V_2(2, 3, 5).
    let m1 = build_vd(
        &AwParams { a: int(2), b: int(3), c: int(5), d: 2 },
        &ctx,
    )
    .unwrap();
    let m2 = build_vd(
        &AwParams { a: int(3), b: int(2), c: int(5), d: 2 },
        &ctx,
    )
    .unwrap();
    let twisted = m1.action.twist_z2(&ctx);
    match find_intertwiner(&twisted, &m2.action) {
        Some(t) => {
            println!("V_2(2,3,5)^twist ~ V_2(3,2,5): intertwiner found");
            println!("intertwiner is {}x{}, invertible: {}", t.rows(), t.cols(), t.inverse().is_some());
        }
        None => println!("no intertwiner (unexpected)"),
    }

    // Quarter-twist composition on an even-family module.
    let h = build(
        &HParams {
            family: Family::O,
            d: 4,
            k: [int(2), int(3), frac(1, 4), frac(1, 48)],
        },
        &ctx,
    )
    .unwrap();
    let back = h.twist_z4(1).twist_z4(1).twist_z4(1).twist_z4(1);
    println!(
        "four quarter-twists compose to the identity: {}",
        back.t == h.t && back.twist == h.twist
    );
}
