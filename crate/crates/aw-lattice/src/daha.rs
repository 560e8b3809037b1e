//! Finite-dimensional modules for the universal DAHA of rank one, and their
//! pullbacks to Askey-Wilson actions.
//!
//! Two families cover (up to twisting) all finite-dimensional irreducible
//! modules: E(k0,k1,k2,k3) of even dimension d+1 (d odd, k0^2 = q^{-d-1})
//! and O(k0,k1,k2,k3) of odd dimension d+1 (d even, k0k1k2k3 = q^{-d-1}).
//! The generator matrices are transcribed column by column from the defining
//! basis formulas; a hand-computed fixture in the tests pins the
//! transcription down entry by entry.

use num::{One, Zero};

use crate::aw::AwAction;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{inv, QContext, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    E,
    O,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::E => write!(f, "E"),
            Family::O => write!(f, "O"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HParams {
    pub family: Family,
    pub d: usize,
    pub k: [Scalar; 4],
}

impl HParams {
    pub fn validate(&self, ctx: &QContext) -> Result<()> {
        if self.k.iter().any(|x| x.is_zero()) {
            return Err(Error::Argument("parameters k0..k3 must be nonzero".into()));
        }
        let d = self.d as i64;
        match self.family {
            Family::E => {
                if self.d % 2 == 0 {
                    return Err(Error::Argument("family E needs odd d".into()));
                }
                if &self.k[0] * &self.k[0] != ctx.qpow(-d - 1) {
                    return Err(Error::Argument("family E needs k0^2 = q^{-d-1}".into()));
                }
            }
            Family::O => {
                if self.d % 2 == 1 {
                    return Err(Error::Argument("family O needs even d".into()));
                }
                if self.k.iter().product::<Scalar>() != ctx.qpow(-d - 1) {
                    return Err(Error::Argument(
                        "family O needs k0 k1 k2 k3 = q^{-d-1}".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A concrete module for the rank-one universal DAHA: matrices for the four
/// generators (and their inverses), the central scalars, plus the untwisted
/// parameters and the twist that produced the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModule {
    pub params: HParams,
    pub twist: u8,
    pub t: [Matrix; 4],
    pub t_inv: [Matrix; 4],
    pub c: [Scalar; 4],
}

pub fn build(params: &HParams, ctx: &QContext) -> Result<HModule> {
    params.validate(ctx)?;
    let t = match params.family {
        Family::E => build_e_generators(params, ctx),
        Family::O => build_o_generators(params, ctx),
    };
    // c_i = k_i + k_i^{-1}; the twist permutes generators, not parameters.
    let c = std::array::from_fn(|i| &params.k[i] + inv(&params.k[i]));
    let t_inv = invert_generators(&t, &c)?;
    Ok(HModule {
        params: params.clone(),
        twist: 0,
        t,
        t_inv,
        c,
    })
}

/// t_i^{-1} = c_i - t_i, cross-checked against actual matrix inversion.
fn invert_generators(t: &[Matrix; 4], c: &[Scalar; 4]) -> Result<[Matrix; 4]> {
    let n = t[0].rows();
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let candidate = Matrix::scalar(n, &c[i]).sub(&t[i]);
        if t[i].mul(&candidate) != Matrix::identity(n) {
            return Err(Error::Argument(format!(
                "generator t{i} is not inverted by c{i} - t{i}"
            )));
        }
        out.push(candidate);
    }
    Ok(out.try_into().unwrap())
}

/// Generators of E(k0,k1,k2,k3); columns are images of the basis vectors.
fn build_e_generators(params: &HParams, ctx: &QContext) -> [Matrix; 4] {
    let d = params.d as i64;
    let n = params.d + 1;
    let k: Vec<Scalar> = params.k.to_vec();
    let ki: Vec<Scalar> = k.iter().map(inv).collect();
    let mut t0 = Matrix::zeros(n, n);
    let mut t1 = Matrix::zeros(n, n);
    let mut t2 = Matrix::zeros(n, n);
    let mut t3 = Matrix::zeros(n, n);
    let p013 = |i: i64| &k[0] * &k[1] * &k[3] * ctx.qpow(i);

    for col in 0..n {
        let i = col as i64;
        let odd = i % 2 == 1;
        // t0
        if i == 0 || i == d {
            t0.set(col, col, k[0].clone());
        } else if odd {
            let f = &ki[0] * ctx.qpow(-i - 1);
            t0.set(col, col, f.clone());
            t0.set(col + 1, col, -f);
        } else {
            let sub = &ki[0]
                * ctx.qpow(-i)
                * (Scalar::one() - ctx.qpow(i))
                * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(i));
            t0.set(col - 1, col, sub);
            t0.set(col, col, &k[0] + &ki[0] - &ki[0] * ctx.qpow(-i));
        }
        // t1
        if i == 0 {
            t1.set(0, 0, k[1].clone());
            t1.set(1, 0, ki[1].clone());
        } else if odd {
            t1.set(col, col, ki[1].clone());
        } else {
            let sub = -&k[1]
                * (Scalar::one() - ctx.qpow(i))
                * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(i));
            t1.set(col - 1, col, sub);
            t1.set(col, col, k[1].clone());
            t1.set(col + 1, col, ki[1].clone());
        }
        // t2
        if !odd {
            let f = &ki[0] * &ki[1] * &ki[3] * ctx.qpow(-i - 1);
            t2.set(col, col, f.clone());
            t2.set(col + 1, col, -f);
        } else {
            let p = p013(i);
            let sub = (&p - &k[2]) * (&p - &ki[2]) * inv(&p);
            t2.set(col - 1, col, sub);
            t2.set(
                col,
                col,
                &k[2] + &ki[2] - &ki[0] * &ki[1] * &ki[3] * ctx.qpow(-i),
            );
        }
        // t3
        if !odd {
            t3.set(col, col, k[3].clone());
        } else {
            let p = p013(i);
            let sub = -&ki[3] * (&p - &k[2]) * (&p - &ki[2]);
            t3.set(col - 1, col, sub);
            t3.set(col, col, ki[3].clone());
            if i < d {
                t3.set(col + 1, col, k[3].clone());
            }
        }
    }
    [t0, t1, t2, t3]
}

/// Generators of O(k0,k1,k2,k3).  At d = 0 every boundary rule collapses to
/// the scalar action t_i = k_i.
fn build_o_generators(params: &HParams, ctx: &QContext) -> [Matrix; 4] {
    let d = params.d as i64;
    let n = params.d + 1;
    let k: Vec<Scalar> = params.k.to_vec();
    let ki: Vec<Scalar> = k.iter().map(inv).collect();
    if n == 1 {
        return std::array::from_fn(|i| Matrix::scalar(1, &k[i]));
    }
    let mut t0 = Matrix::zeros(n, n);
    let mut t1 = Matrix::zeros(n, n);
    let mut t2 = Matrix::zeros(n, n);
    let mut t3 = Matrix::zeros(n, n);

    for col in 0..n {
        let i = col as i64;
        let odd = i % 2 == 1;
        // t0
        if i == 0 {
            t0.set(0, 0, k[0].clone());
        } else if odd {
            let f = &ki[0] * ctx.qpow(-i - 1);
            t0.set(col, col, f.clone());
            t0.set(col + 1, col, -f);
        } else {
            let sub = &ki[0]
                * ctx.qpow(-i)
                * (Scalar::one() - ctx.qpow(i))
                * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(i));
            t0.set(col - 1, col, sub);
            t0.set(col, col, &k[0] + &ki[0] - &ki[0] * ctx.qpow(-i));
        }
        // t1
        if i == 0 {
            t1.set(0, 0, k[1].clone());
            t1.set(1, 0, ki[1].clone());
        } else if i == d {
            let sub = -&k[1]
                * (Scalar::one() - ctx.qpow(d))
                * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(d));
            t1.set(col - 1, col, sub);
            t1.set(col, col, k[1].clone());
        } else if odd {
            t1.set(col, col, ki[1].clone());
        } else {
            let sub = -&k[1]
                * (Scalar::one() - ctx.qpow(i))
                * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(i));
            t1.set(col - 1, col, sub);
            t1.set(col, col, k[1].clone());
            t1.set(col + 1, col, ki[1].clone());
        }
        // t2
        if i == d {
            t2.set(col, col, k[2].clone());
        } else if !odd {
            let f = &k[2] * ctx.qpow(d - i);
            t2.set(col, col, f.clone());
            t2.set(col + 1, col, -f);
        } else {
            let sub = -&k[2]
                * (Scalar::one() - &ki[2] * &ki[2] * ctx.qpow(i - d - 1))
                * (Scalar::one() - ctx.qpow(d - i + 1));
            t2.set(col - 1, col, sub);
            t2.set(col, col, &k[2] + &ki[2] - &k[2] * ctx.qpow(d - i + 1));
        }
        // t3
        if !odd {
            t3.set(col, col, k[3].clone());
        } else {
            let sub = -&ki[3]
                * (Scalar::one() - &ki[2] * &ki[2] * ctx.qpow(i - d - 1))
                * (Scalar::one() - ctx.qpow(i - d - 1));
            t3.set(col - 1, col, sub);
            t3.set(col, col, ki[3].clone());
            t3.set(col + 1, col, k[3].clone());
        }
    }
    [t0, t1, t2, t3]
}

impl HModule {
    pub fn dim(&self) -> usize {
        self.t[0].rows()
    }

    /// Twist by an element of Z/4Z: the automorphism cyclically shifts the
    /// generators, so the twisted action of t_i is the matrix of t_{i+eps}.
    pub fn twist_z4(&self, eps: u8) -> HModule {
        let e = (eps % 4) as usize;
        let pick = |arr: &[Matrix; 4]| std::array::from_fn(|i| arr[(i + e) % 4].clone());
        let c = std::array::from_fn(|i| self.c[(i + e) % 4].clone());
        HModule {
            params: self.params.clone(),
            twist: (self.twist + eps) % 4,
            t: pick(&self.t),
            t_inv: pick(&self.t_inv),
            c,
        }
    }

    /// Check the defining relations of the universal DAHA on this action.
    pub fn check_relations(&self, ctx: &QContext) -> HRelationReport {
        let n = self.dim();
        let id = Matrix::identity(n);
        let inverses = (0..4).all(|i| {
            self.t[i].mul(&self.t_inv[i]) == id && self.t_inv[i].mul(&self.t[i]) == id
        });
        let central = (0..4).all(|i| {
            let ci = self.t[i].add(&self.t_inv[i]);
            ci.as_scalar_multiple_of_identity()
                .is_some_and(|s| s == self.c[i])
        });
        let product = self.t[0]
            .mul(&self.t[1])
            .mul(&self.t[2])
            .mul(&self.t[3])
            == Matrix::scalar(n, ctx.q_inv());
        HRelationReport {
            inverses,
            central,
            product,
            ok: inverses && central && product,
        }
    }

    /// Pull the action back along the embedding of the Askey-Wilson algebra:
    /// A = Y + Y^{-1}, B = X + X^{-1}, C = t2 t0 + (t2 t0)^{-1}, and the
    /// central elements become c3c2 + c1(q t0^{-1} + q^{-1} t0) etc.
    pub fn pullback(&self, ctx: &QContext) -> AwAction {
        let n = self.dim();
        let pair = |u: usize| {
            let fwd = self.t[u].mul(&self.t[0]);
            let bwd = self.t_inv[0].mul(&self.t_inv[u]);
            fwd.add(&bwd)
        };
        let shift = self.t_inv[0].scale(ctx.q()).add(&self.t[0].scale(ctx.q_inv()));
        let central = |x: usize, y: usize, z: usize| {
            Matrix::scalar(n, &(&self.c[x] * &self.c[y])).add(&shift.scale(&self.c[z]))
        };
        AwAction {
            a: pair(1),
            b: pair(3),
            c: pair(2),
            alpha: central(3, 2, 1),
            beta: central(2, 1, 3),
            gamma: central(1, 3, 2),
        }
    }

    /// Closed form for the image of the Casimir element under the embedding:
    /// (q+q^{-1})^2 - (q^{-1}t0 + q t0^{-1})^2 - c1^2 - c2^2 - c3^2
    /// - c1c2c3 (q^{-1}t0 + q t0^{-1}).
    pub fn casimir_image(&self, ctx: &QContext) -> Matrix {
        let n = self.dim();
        let shift = self.t[0].scale(ctx.q_inv()).add(&self.t_inv[0].scale(ctx.q()));
        let sq = (ctx.q() + ctx.q_inv()) * (ctx.q() + ctx.q_inv());
        let csum = (1..4).fold(Scalar::zero(), |acc, i| acc + &self.c[i] * &self.c[i]);
        let cprod = &self.c[1] * &self.c[2] * &self.c[3];
        Matrix::scalar(n, &(sq - csum))
            .sub(&shift.mul(&shift))
            .sub(&shift.scale(&cprod))
    }

    pub fn x(&self) -> Matrix {
        self.t[3].mul(&self.t[0])
    }

    pub fn y(&self) -> Matrix {
        self.t[0].mul(&self.t[1])
    }

    /// Check the X/Y raising-lowering recurrences on the defining basis
    /// (only meaningful on the untwisted action).
    pub fn verify_xy_recurrences(&self, ctx: &QContext) -> bool {
        assert_eq!(self.twist, 0, "recurrences are stated for the untwisted basis");
        let n = self.dim();
        let d = self.params.d as i64;
        let k = &self.params.k;
        let x = self.x();
        let x_inv = self.t_inv[0].mul(&self.t_inv[3]);
        let y = self.y();
        let y_inv = self.t_inv[1].mul(&self.t_inv[0]);
        let basis = |i: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        };
        let rho = |i: i64| -> Scalar {
            match (self.params.family, i % 2 == 1) {
                (Family::E, true) => {
                    let p = &k[0] * &k[1] * &k[3] * ctx.qpow(i);
                    (&p - &k[2]) * (&p - inv(&k[2]))
                }
                (Family::O, true) => {
                    (ctx.qpow(i - d - 1) - Scalar::one())
                        * (inv(&k[2]) * inv(&k[2]) * ctx.qpow(i - d - 1) - Scalar::one())
                }
                (_, false) => {
                    (Scalar::one() - ctx.qpow(i))
                        * (Scalar::one() - &k[0] * &k[0] * ctx.qpow(i))
                }
            }
        };
        for col in 0..n {
            let i = col as i64;
            let ceil = (i + 1) / 2; // ceil(i/2) for i >= 0
            let xe = if i % 2 == 1 { &x } else { &x_inv };
            let ye = if i % 2 == 1 { &y } else { &y_inv };
            // X recurrence
            let op = Matrix::identity(n).sub(&xe.scale(&(&k[0] * &k[3] * ctx.qpow(2 * ceil))));
            let got = op.mul_vec(&basis(col));
            let want = if i == 0 {
                vec![Scalar::zero(); n]
            } else {
                let mut w = basis(col - 1);
                let r = rho(i);
                w.iter_mut().for_each(|e| *e *= &r);
                w
            };
            if got != want {
                return false;
            }
            // Y recurrence
            let op = Matrix::identity(n).sub(&ye.scale(&(&k[0] * &k[1] * ctx.qpow(2 * ceil))));
            let got = op.mul_vec(&basis(col));
            let want = if i == d {
                vec![Scalar::zero(); n]
            } else {
                basis(col + 1)
            };
            if got != want {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct HRelationReport {
    pub inverses: bool,
    pub central: bool,
    pub product: bool,
    pub ok: bool,
}

/// Irreducibility criterion for the untwisted module (twisting preserves it).
pub fn h_is_irreducible(params: &HParams, ctx: &QContext) -> bool {
    let d = params.d as i64;
    let k = &params.k;
    match params.family {
        Family::E => {
            let base = &k[0] * &k[1] * &k[2] * &k[3];
            let products = [
                base.clone(),
                &k[0] * inv(&k[1]) * &k[2] * &k[3],
                &k[0] * &k[1] * inv(&k[2]) * &k[3],
                &k[0] * &k[1] * &k[2] * inv(&k[3]),
            ];
            (1..=d)
                .step_by(2)
                .all(|i| !products.contains(&ctx.qpow(-i)))
        }
        Family::O => {
            let squares: Vec<Scalar> = k.iter().map(|x| x * x).collect();
            (2..=d)
                .step_by(2)
                .all(|i| !squares.contains(&ctx.qpow(-i)))
        }
    }
}

/// Eigenvalue candidates for the pulled-back generators: everything of the
/// form p q^j + p^{-1} q^{-j} where p is a product k_a^{+-1} k_b^{+-1}.
pub fn h_candidates(params: &HParams, ctx: &QContext) -> Vec<Scalar> {
    let d = params.d as i64;
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            if a == b {
                continue;
            }
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let p = crate::scalar::pow(&params.k[a], sa) * crate::scalar::pow(&params.k[b], sb);
                for j in -(2 * d + 2)..=(2 * d + 2) {
                    out.push(&p * ctx.qpow(j) + inv(&p) * ctx.qpow(-j));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn e_fixture_params() -> HParams {
        HParams {
            family: Family::E,
            d: 1,
            k: [frac(1, 2), int(3), int(5), int(7)],
        }
    }

    fn o_fixture_params() -> HParams {
        HParams {
            family: Family::O,
            d: 2,
            k: [int(2), int(3), frac(1, 4), frac(1, 12)],
        }
    }

    #[test]
    fn e_fixture_matrices() {
        let ctx = QContext::default_q();
        let m = build(&e_fixture_params(), &ctx).unwrap();
        let expect = |rows: Vec<Vec<Scalar>>| Matrix::from_rows(rows);
        assert_eq!(m.t[0], Matrix::scalar(2, &frac(1, 2)));
        assert_eq!(
            m.t[1],
            expect(vec![vec![int(3), int(0)], vec![frac(1, 3), frac(1, 3)]])
        );
        assert_eq!(
            m.t[2],
            expect(vec![
                vec![frac(1, 21), frac(1664, 105)],
                vec![frac(-1, 21), frac(541, 105)],
            ])
        );
        assert_eq!(
            m.t[3],
            expect(vec![
                vec![int(7), frac(-1664, 35)],
                vec![int(0), frac(1, 7)],
            ])
        );
    }

    #[test]
    fn o_fixture_matrices() {
        let ctx = QContext::default_q();
        let m = build(&o_fixture_params(), &ctx).unwrap();
        let expect = |rows: Vec<Vec<Scalar>>| Matrix::from_rows(rows);
        assert_eq!(
            m.t[0],
            expect(vec![
                vec![int(2), int(0), int(0)],
                vec![int(0), frac(1, 8), frac(45, 8)],
                vec![int(0), frac(-1, 8), frac(19, 8)],
            ])
        );
        assert_eq!(
            m.t[1],
            expect(vec![
                vec![int(3), int(0), int(0)],
                vec![frac(1, 3), frac(1, 3), int(-135)],
                vec![int(0), int(0), int(3)],
            ])
        );
        assert_eq!(
            m.t[2],
            expect(vec![
                vec![int(1), frac(-9, 4), int(0)],
                vec![int(-1), frac(13, 4), int(0)],
                vec![int(0), int(0), frac(1, 4)],
            ])
        );
        assert_eq!(
            m.t[3],
            expect(vec![
                vec![frac(1, 12), int(27), int(0)],
                vec![int(0), int(12), int(0)],
                vec![int(0), frac(1, 12), frac(1, 12)],
            ])
        );
    }

    #[test]
    fn relations_hold_on_fixtures_and_twists() {
        let ctx = QContext::default_q();
        for params in [e_fixture_params(), o_fixture_params()] {
            let m = build(&params, &ctx).unwrap();
            for eps in 0..4 {
                let tw = m.twist_z4(eps);
                assert!(tw.check_relations(&ctx).ok, "{params:?} eps={eps}");
            }
            assert_eq!(m.twist_z4(1).twist_z4(3), m);
        }
    }

    #[test]
    fn xy_recurrences_hold() {
        let ctx = QContext::default_q();
        for params in [
            e_fixture_params(),
            o_fixture_params(),
            HParams {
                family: Family::E,
                d: 3,
                k: [frac(1, 4), int(3), frac(2, 7), int(5)],
            },
            HParams {
                family: Family::O,
                d: 4,
                k: [int(2), int(4), frac(1, 2), frac(1, 128)],
            },
        ] {
            let m = build(&params, &ctx).unwrap();
            assert!(m.verify_xy_recurrences(&ctx), "{params:?}");
        }
    }

    #[test]
    fn pullback_satisfies_aw_relations_and_casimir_formula() {
        let ctx = QContext::default_q();
        for params in [e_fixture_params(), o_fixture_params()] {
            let m = build(&params, &ctx).unwrap();
            for eps in 0..4 {
                let tw = m.twist_z4(eps);
                let aw = tw.pullback(&ctx);
                assert!(aw.check_relations(&ctx).ok, "{params:?} eps={eps}");
                assert_eq!(aw.casimir(&ctx), tw.casimir_image(&ctx), "{params:?} eps={eps}");
            }
        }
    }

    #[test]
    fn d0_module_is_scalar() {
        let ctx = QContext::default_q();
        let params = HParams {
            family: Family::O,
            d: 0,
            k: [int(2), int(3), frac(1, 4), frac(1, 3)],
        };
        let m = build(&params, &ctx).unwrap();
        for i in 0..4 {
            assert_eq!(m.t[i], Matrix::scalar(1, &params.k[i]));
        }
        assert!(m.check_relations(&ctx).ok);
        assert!(m.verify_xy_recurrences(&ctx));
    }

    #[test]
    fn irreducibility_criteria() {
        let ctx = QContext::default_q();
        assert!(h_is_irreducible(&e_fixture_params(), &ctx));
        assert!(h_is_irreducible(&o_fixture_params(), &ctx));
        // E violation: k0k1k2k3 = q^{-1} with d = 1.
        let bad_e = HParams {
            family: Family::E,
            d: 1,
            k: [frac(1, 2), int(3), frac(1, 3), int(1)],
        };
        assert!(!h_is_irreducible(&bad_e, &ctx));
        // O violation: k0^2 = q^{-2} with d = 2.
        let bad_o = HParams {
            family: Family::O,
            d: 2,
            k: [frac(1, 2), int(2), int(1), frac(1, 8)],
        };
        assert!(!h_is_irreducible(&bad_o, &ctx));
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let ctx = QContext::default_q();
        let mut p = e_fixture_params();
        p.d = 2;
        assert!(build(&p, &ctx).is_err());
        let mut p = e_fixture_params();
        p.k[0] = int(1);
        assert!(build(&p, &ctx).is_err());
        let mut p = o_fixture_params();
        p.k[3] = int(1);
        assert!(build(&p, &ctx).is_err());
    }
}
