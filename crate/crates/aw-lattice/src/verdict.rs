//! Theory conformance: compare a computed submodule lattice against the
//! classification of pulled-back DAHA modules, identify every composition
//! factor with its predicted bidiagonal model, and check the summary
//! dichotomy (lattice shape governed by the t0 eigenstructure) together
//! with its corollaries (quotients by eigenspaces irreducible or zero;
//! complete reducibility iff t0 diagonalizable).

use num::{One, Zero};

use crate::aw::{build_vd, find_intertwiner, AwParams};
use crate::daha::{Family, HModule, HParams};
use crate::eigen::eigenspace;
use crate::error::{Error, Result};
use crate::lattice::{
    factor_module, full_lattice, is_irreducible, minimal_submodules, DeltaModule, Lattice, Shape,
};
use crate::scalar::{format_scalar, inv, QContext, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    Mismatch,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Confirmed => "CONFIRMED",
            Status::Mismatch => "MISMATCH",
            Status::Inconclusive => "INCONCLUSIVE",
        };
        write!(f, "{s}")
    }
}

/// Expected lattice geometry for an irreducible module, derived from the
/// family, the twist, and the degeneracy of the relevant parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub shape: Shape,
    /// Dimensions of the strictly intermediate nodes, sorted.
    pub middle_dims: Vec<usize>,
}

pub fn expected_lattice(params: &HParams, twist: u8) -> Option<Expectation> {
    let d = params.d;
    match (params.family, twist % 4) {
        (Family::E, 0) => Some(if d == 1 {
            Expectation {
                shape: Shape::Chain2,
                middle_dims: vec![],
            }
        } else {
            Expectation {
                shape: Shape::Diamond,
                middle_dims: vec![(d - 1) / 2, (d + 3) / 2],
            }
        }),
        (Family::E, e) => {
            let kr = &params.k[e as usize];
            Some(if (kr * kr).is_one() {
                Expectation {
                    shape: Shape::Chain3,
                    middle_dims: vec![(d + 1) / 2],
                }
            } else {
                Expectation {
                    shape: Shape::Diamond,
                    middle_dims: vec![(d + 1) / 2, (d + 1) / 2],
                }
            })
        }
        (Family::O, 0) => Some(if d == 0 {
            Expectation {
                shape: Shape::Chain2,
                middle_dims: vec![],
            }
        } else if (&params.k[0] * &params.k[0]).is_one() {
            Expectation {
                shape: Shape::Chain4,
                middle_dims: vec![d / 2, d / 2 + 1],
            }
        } else {
            Expectation {
                shape: Shape::Diamond,
                middle_dims: vec![d / 2, d / 2 + 1],
            }
        }),
        // Twisted O modules are not classified here.
        (Family::O, _) => None,
    }
}

/// The distinguished t0 eigenvalue whose eigenspace carries the "descendant"
/// model in the classification.
pub fn distinguished_eigenvalue(params: &HParams, twist: u8) -> Option<Scalar> {
    match (params.family, twist % 4) {
        (Family::E, 0) => Some(params.k[0].clone()),
        (Family::E, 1) => Some(inv(&params.k[1])),
        (Family::E, 2) => Some(inv(&params.k[2])),
        (Family::E, _) => Some(params.k[3].clone()),
        (Family::O, 0) => Some(params.k[0].clone()),
        (Family::O, _) => None,
    }
}

/// Structural role of a composition factor within the classified lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// The whole module (irreducible case).
    Whole,
    /// The eigenspace submodule for the distinguished eigenvalue.
    SubTheta,
    /// The quotient by that eigenspace.
    QuotTheta,
    /// The eigenspace submodule for the inverse eigenvalue.
    SubThetaInv,
    /// The quotient by the inverse eigenspace.
    QuotThetaInv,
    /// The codimension-1 submodule inside the eigenspace (chain4 case).
    SubPrime,
    /// The 1-dimensional middle factor of the chain4 case.
    MidPrime,
}

/// Predicted bidiagonal model for a composition factor in the given role.
pub fn predicted_model(params: &HParams, twist: u8, role: Role, ctx: &QContext) -> Result<AwParams> {
    let d = params.d as i64;
    let k = &params.k;
    let q = |e: i64| ctx.qpow(e);
    // (d', [a, b, c]) for the eigenspace ("desc") and quotient ("quot")
    // models, per family and twist.
    let (desc, quot): ((i64, [Scalar; 3]), (i64, [Scalar; 3])) = match (params.family, twist % 4) {
        (Family::E, 0) => {
            let h = (d + 1) / 2;
            let t = [
                &k[0] * &k[1] * q(h),
                &k[0] * &k[3] * q(h),
                &k[0] * &k[2] * q(h),
            ];
            ((h, t.clone()), ((d - 3) / 2, t))
        }
        (Family::E, 1) => (
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[3] * q((d + 1) / 2),
                    &k[0] * &k[1] * q((d + 3) / 2),
                    &k[0] * &k[2] * q((d + 1) / 2),
                ],
            ),
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[3] * q((d + 1) / 2),
                    &k[0] * &k[1] * q((d - 1) / 2),
                    &k[0] * &k[2] * q((d + 1) / 2),
                ],
            ),
        ),
        (Family::E, 2) => (
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[1] * q((d + 1) / 2),
                    &k[0] * &k[3] * q((d + 1) / 2),
                    &k[0] * &k[2] * q((d + 3) / 2),
                ],
            ),
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[1] * q((d + 1) / 2),
                    &k[0] * &k[3] * q((d + 1) / 2),
                    &k[0] * &k[2] * q((d - 1) / 2),
                ],
            ),
        ),
        (Family::E, _) => (
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[3] * q((d - 1) / 2),
                    &k[0] * &k[1] * q((d + 1) / 2),
                    &k[0] * &k[2] * q((d + 1) / 2),
                ],
            ),
            (
                (d - 1) / 2,
                [
                    &k[0] * &k[3] * q((d + 3) / 2),
                    &k[0] * &k[1] * q((d + 1) / 2),
                    &k[0] * &k[2] * q((d + 1) / 2),
                ],
            ),
        ),
        (Family::O, 0) => {
            let h = d / 2;
            (
                (
                    h,
                    [
                        &k[0] * &k[1] * q(h),
                        &k[0] * &k[3] * q(h),
                        &k[0] * &k[2] * q(h),
                    ],
                ),
                (
                    h - 1,
                    [
                        &k[0] * &k[1] * q(h + 1),
                        &k[0] * &k[3] * q(h + 1),
                        &k[0] * &k[2] * q(h + 1),
                    ],
                ),
            )
        }
        (Family::O, _) => {
            return Err(Error::Argument("twisted O factors are not classified".into()))
        }
    };
    let (dp, abc) = match role {
        Role::Whole | Role::SubTheta | Role::QuotThetaInv => desc,
        Role::QuotTheta | Role::SubThetaInv | Role::SubPrime => quot,
        Role::MidPrime => (
            0,
            [&k[0] * &k[1], &k[0] * &k[3], &k[0] * &k[2]],
        ),
    };
    if dp < 0 {
        return Err(Error::Argument(format!(
            "role {role:?} has no factor here (negative model degree)"
        )));
    }
    Ok(AwParams {
        a: abc[0].clone(),
        b: abc[1].clone(),
        c: abc[2].clone(),
        d: dp as usize,
    })
}

/// One identified composition factor.
#[derive(Debug, Clone)]
pub struct FactorLabel {
    /// Index pair into the lattice's cover list.
    pub cover: (usize, usize),
    pub role: Role,
    pub model: AwParams,
    pub traces_match: bool,
    pub intertwiner_found: bool,
}

impl FactorLabel {
    pub fn ok(&self) -> bool {
        self.traces_match && self.intertwiner_found
    }

    pub fn model_string(&self) -> String {
        format!(
            "V_{}({}, {}, {})",
            self.model.d,
            format_scalar(&self.model.a),
            format_scalar(&self.model.b),
            format_scalar(&self.model.c)
        )
    }
}

/// Assign a role to each covering edge of a classified lattice.
fn edge_roles(
    lat: &Lattice,
    module: &DeltaModule,
    theta: &Scalar,
) -> Result<Vec<((usize, usize), Role)>> {
    let t0 = module
        .t0
        .as_ref()
        .ok_or_else(|| Error::Argument("role assignment needs t0".into()))?;
    let v_theta = eigenspace(t0, theta);
    let theta_inv = inv(theta);
    let v_theta_inv = eigenspace(t0, &theta_inv);
    let top = lat.nodes.len() - 1;
    let mut out = Vec::new();
    for &(i, j) in &lat.covers {
        let (lo, hi) = (&lat.nodes[i], &lat.nodes[j]);
        let role = match lat.shape {
            Shape::Chain2 => Role::Whole,
            Shape::Chain3 => {
                // Single middle node = V(theta) with theta = theta^{-1}.
                if i == 0 {
                    Role::SubTheta
                } else {
                    Role::QuotTheta
                }
            }
            Shape::Chain4 => {
                if i == 0 {
                    Role::SubPrime
                } else if j == top {
                    Role::QuotTheta
                } else {
                    Role::MidPrime
                }
            }
            Shape::Diamond => {
                let middle = if i == 0 { hi } else { lo };
                if *middle == v_theta {
                    if i == 0 {
                        Role::SubTheta
                    } else {
                        Role::QuotTheta
                    }
                } else if *middle == v_theta_inv {
                    if i == 0 {
                        Role::SubThetaInv
                    } else {
                        Role::QuotThetaInv
                    }
                } else {
                    return Err(Error::Inconclusive(
                        "diamond middle is not a t0-eigenspace".into(),
                    ));
                }
            }
            Shape::Other => {
                return Err(Error::Inconclusive(
                    "unclassified lattice shape; no roles".into(),
                ))
            }
        };
        out.push(((i, j), role));
    }
    // Sanity for the chain shapes: the eigenspace node must really be the
    // t0-eigenspace for theta.
    if matches!(lat.shape, Shape::Chain3 | Shape::Chain4) {
        let expected = &lat.nodes[if lat.shape == Shape::Chain3 { 1 } else { 2 }];
        if *expected != v_theta {
            return Err(Error::Inconclusive(
                "chain middle is not the distinguished t0-eigenspace".into(),
            ));
        }
    }
    Ok(out)
}

/// Does the factor's action have the traces of the predicted model?
/// Checks tr = (p + p^{-1}) [d'+1]_q for each generator, the content of the
/// trace quadratics evaluated at the predicted parameters.
fn traces_match(factor: &DeltaModule, model: &AwParams, ctx: &QContext) -> Result<bool> {
    let bracket = ctx.q_bracket(model.d as i64 + 1)?;
    let preds = [
        (&factor.action.a, &model.a),
        (&factor.action.b, &model.b),
        (&factor.action.c, &model.c),
    ];
    for (mat, p) in preds {
        if mat.trace() != (p + inv(p)) * &bracket {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identify every composition factor of a computed lattice against the
/// predicted models: trace test plus an explicit invertible intertwiner.
pub fn identify_factors(
    module: &DeltaModule,
    lat: &Lattice,
    params: &HParams,
    twist: u8,
    ctx: &QContext,
) -> Result<Vec<FactorLabel>> {
    let theta = distinguished_eigenvalue(params, twist)
        .ok_or_else(|| Error::Argument("no classification for this twist".into()))?;
    let roles = edge_roles(lat, module, &theta)?;
    let mut out = Vec::new();
    for ((i, j), role) in roles {
        let model = predicted_model(params, twist, role, ctx)?;
        let factor = factor_module(module, &lat.nodes[i], &lat.nodes[j]);
        if factor.dim() != model.d + 1 {
            return Err(Error::Inconclusive(format!(
                "factor dimension {} does not match model degree {}",
                factor.dim(),
                model.d
            )));
        }
        let traces_ok = traces_match(&factor, &model, ctx)?;
        let built = build_vd(&model, ctx)?;
        let intertwiner = find_intertwiner(&factor.action, &built.action);
        out.push(FactorLabel {
            cover: (i, j),
            role,
            model,
            traces_match: traces_ok,
            intertwiner_found: intertwiner.is_some(),
        });
    }
    Ok(out)
}

/// The summary dichotomy and its corollaries, checked on one module.
#[derive(Debug, Clone)]
pub struct SummaryVerdict {
    pub diagonalizable: bool,
    pub eigenvalue_count: usize,
    /// Non-diagonalizable case: the unique eigenvalue, which must be +-1.
    pub nondiag_eigenvalue_in_pm1: Option<bool>,
    pub shape_matches_dichotomy: bool,
    /// V/V(theta) is zero or irreducible, for every eigenvalue theta.
    pub quotients_irreducible_or_zero: bool,
    /// socle = V iff t0 diagonalizable.
    pub complete_reducibility_iff_diag: bool,
    pub status: Status,
}

pub fn summary_verdict(h: &HModule, ctx: &QContext) -> Result<SummaryVerdict> {
    let (module, _) = DeltaModule::from_pullback(h, ctx)?;
    let lat = full_lattice(&module)?;
    let eig = crate::lattice::t0_eigen(h)?;
    let present: Vec<(Scalar, usize)> = eig
        .eigenvalues
        .iter()
        .filter(|(_, dim)| *dim > 0)
        .cloned()
        .collect();
    let diagonalizable = eig.diagonalizable;
    let n = module.dim();

    let mut nondiag_eigenvalue_in_pm1 = None;
    let shape_matches_dichotomy = if !diagonalizable {
        let unique = present.len() == 1;
        let theta_pm1 = unique && {
            let theta = &present[0].0;
            (theta * theta).is_one()
        };
        nondiag_eigenvalue_in_pm1 = Some(theta_pm1);
        let shape_ok = if n % 2 == 0 {
            lat.shape == Shape::Chain3
        } else {
            // Chain4 with the inner node of codimension 1 inside V(theta).
            lat.shape == Shape::Chain4
                && lat.nodes.len() == 4
                && lat.nodes[2].dim() == lat.nodes[1].dim() + 1
        };
        unique && theta_pm1 && shape_ok && {
            // The eigenspace itself must be a lattice node.
            let t0 = module.t0.as_ref().unwrap();
            let vt = eigenspace(t0, &present[0].0);
            lat.nodes.contains(&vt)
        }
    } else if present.len() == 1 {
        lat.shape == Shape::Chain2 && n <= 2
    } else {
        lat.shape == Shape::Diamond && present.iter().all(|(t, _)| !(t * t).is_one()) && {
            let (t1, t2) = (&present[0].0, &present[1].0);
            t1 == &inv(t2)
        }
    };

    // Corollary: V/V(theta) is zero or irreducible for each eigenvalue.
    let mut quotients_ok = true;
    let t0 = module.t0.as_ref().unwrap();
    for (theta, dim) in &present {
        let vt = eigenspace(t0, theta);
        if *dim == n {
            continue; // quotient is zero
        }
        let q = crate::lattice::quotient(&module, &vt);
        if !is_irreducible(&q.module)? {
            quotients_ok = false;
        }
    }

    // Corollary: socle = V iff t0 diagonalizable.
    let socle = minimal_submodules(&module)?
        .into_iter()
        .fold(Subspace::zero(n), |acc, m| acc.sum(&m));
    let complete_reducibility_iff_diag = socle.is_full() == diagonalizable;

    let ok = shape_matches_dichotomy && quotients_ok && complete_reducibility_iff_diag;
    Ok(SummaryVerdict {
        diagonalizable,
        eigenvalue_count: present.len(),
        nondiag_eigenvalue_in_pm1,
        shape_matches_dichotomy,
        quotients_irreducible_or_zero: quotients_ok,
        complete_reducibility_iff_diag,
        status: if ok { Status::Confirmed } else { Status::Mismatch },
    })
}

/// Full conformance check for one instance: computed lattice equals the
/// expected geometry, all factors identify, and the summary dichotomy holds.
#[derive(Debug)]
pub struct InstanceVerdict {
    pub lattice: Lattice,
    pub expectation: Option<Expectation>,
    pub shape_ok: bool,
    pub factors: Vec<FactorLabel>,
    pub summary: SummaryVerdict,
    pub status: Status,
}

pub fn verify_instance(h: &HModule, ctx: &QContext) -> Result<InstanceVerdict> {
    if !crate::daha::h_is_irreducible(&h.params, ctx) {
        return Err(Error::Argument(
            "classification applies to irreducible modules only".into(),
        ));
    }
    let (module, _) = DeltaModule::from_pullback(h, ctx)?;
    let lat = full_lattice(&module)?;
    let expectation = expected_lattice(&h.params, h.twist);
    let shape_ok = match &expectation {
        Some(e) => {
            let mut mids: Vec<usize> = lat
                .nodes
                .iter()
                .map(|s| s.dim())
                .filter(|&d| d != 0 && d != module.dim())
                .collect();
            mids.sort();
            lat.shape == e.shape && mids == e.middle_dims
        }
        None => false,
    };
    let factors = identify_factors(&module, &lat, &h.params, h.twist, ctx)?;
    let summary = summary_verdict(h, ctx)?;
    let all_ok = shape_ok
        && lat.closed
        && lat.jh_consistent
        && lat.t0_transport
        && factors.iter().all(|f| f.ok())
        && summary.status == Status::Confirmed;
    Ok(InstanceVerdict {
        lattice: lat,
        expectation,
        shape_ok,
        factors,
        summary,
        status: if all_ok {
            Status::Confirmed
        } else {
            Status::Mismatch
        },
    })
}

/// Check that p is a root of [d+1] x^2 - t x + [d+1] for the given trace —
/// the quadratic trace identity used for identification, exposed for reports.
pub fn trace_quadratic_holds(trace: &Scalar, p: &Scalar, d: usize, ctx: &QContext) -> Result<bool> {
    let bracket = ctx.q_bracket(d as i64 + 1)?;
    let val = &bracket * p * p - trace * p + &bracket;
    Ok(val.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::build;
    use crate::scalar::{frac, int};

    fn check(params: HParams, twist: u8) -> InstanceVerdict {
        let ctx = QContext::default_q();
        let h = build(&params, &ctx).unwrap().twist_z4(twist);
        verify_instance(&h, &ctx).unwrap()
    }

    #[test]
    fn e_untwisted_cases_confirm() {
        for (d, k) in [
            (1, [frac(1, 2), int(3), int(5), int(7)]),
            (3, [frac(1, 4), int(3), frac(2, 7), int(5)]),
        ] {
            let v = check(
                HParams {
                    family: Family::E,
                    d,
                    k,
                },
                0,
            );
            assert_eq!(v.status, Status::Confirmed, "d={d}: {v:?}");
        }
    }

    #[test]
    fn e_twists_confirm_both_branches() {
        // eps = 1, k1^2 = 1: chain3.
        let v = check(
            HParams {
                family: Family::E,
                d: 3,
                k: [frac(1, 4), int(1), frac(2, 7), int(5)],
            },
            1,
        );
        assert_eq!(v.lattice.shape, Shape::Chain3);
        assert_eq!(v.status, Status::Confirmed, "{v:?}");
        // eps = 1, k1^2 != 1: diamond.
        let v = check(
            HParams {
                family: Family::E,
                d: 3,
                k: [frac(1, 4), int(3), frac(2, 7), int(5)],
            },
            1,
        );
        assert_eq!(v.lattice.shape, Shape::Diamond);
        assert_eq!(v.status, Status::Confirmed, "{v:?}");
        // eps = 2 and eps = 3 generic.
        for eps in [2, 3] {
            let v = check(
                HParams {
                    family: Family::E,
                    d: 3,
                    k: [frac(1, 4), int(3), frac(2, 7), int(5)],
                },
                eps,
            );
            assert_eq!(v.status, Status::Confirmed, "eps={eps}: {v:?}");
        }
    }

    #[test]
    fn o_cases_confirm() {
        // d = 0: chain2.
        let v = check(
            HParams {
                family: Family::O,
                d: 0,
                k: [int(2), int(3), frac(1, 4), frac(1, 3)],
            },
            0,
        );
        assert_eq!(v.lattice.shape, Shape::Chain2);
        assert_eq!(v.status, Status::Confirmed, "{v:?}");
        // d = 4, k0^2 = 1: chain4.
        let v = check(
            HParams {
                family: Family::O,
                d: 4,
                k: [int(1), int(3), frac(2, 7), frac(7, 192)],
            },
            0,
        );
        assert_eq!(v.lattice.shape, Shape::Chain4);
        assert_eq!(v.status, Status::Confirmed, "{v:?}");
        // d = 2, generic: diamond.
        let v = check(
            HParams {
                family: Family::O,
                d: 2,
                k: [int(2), int(3), frac(1, 4), frac(1, 12)],
            },
            0,
        );
        assert_eq!(v.lattice.shape, Shape::Diamond);
        assert_eq!(v.status, Status::Confirmed, "{v:?}");
    }
}
