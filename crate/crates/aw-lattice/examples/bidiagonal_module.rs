//! Construct a standalone bidiagonal module V_d(a, b, c), test the
//! irreducibility criterion, and recover the parameters from generator
//! traces alone.
//!
//! Run with: cargo run --example bidiagonal_module

use aw_lattice::aw::{build_vd, trace_identify, vd_is_irreducible, AwParams};
use aw_lattice::scalar::{format_scalar, frac, int, QContext};

fn main() {
    let ctx = QContext::default_q();
    let params = AwParams {
        a: int(2),
        b: int(3),
        c: int(5),
        d: 3,
    };
    let m = build_vd(&params, &ctx).expect("module builds");
    println!("V_3(2, 3, 5): dim {}", m.action.dim());
    println!("relations ok: {}", m.action.check_relations(&ctx).ok);
    println!("irreducible:  {}", vd_is_irreducible(&params, &ctx));

    // Traces satisfy [d+1] x^2 - tr x + [d+1] = 0 with roots p, 1/p, so the
    // parameters are recoverable up to inversion.
    let (a, b, c) = trace_identify(&m.action, &ctx).expect("traces identify");
    println!(
        "recovered from traces: a = {}, b = {}, c = {}",
        format_scalar(&a),
        format_scalar(&b),
        format_scalar(&c)
    );

    // A reducible example: abc lands on the excluded set q^{2i-d-1}.
    let reducible = AwParams {
        a: int(2),
        b: frac(1, 4),
        c: int(2),
        d: 1,
    };
    println!(
        "V_1(2, 1/4, 2) irreducible: {}",
        vd_is_irreducible(&reducible, &ctx)
    );
}
