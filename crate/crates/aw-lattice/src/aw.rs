//! The universal Askey-Wilson algebra: concrete finite-dimensional actions.
//!
//! An `AwAction` is a matrix realization of the generators A, B, C together
//! with the central elements alpha, beta, gamma.  The bidiagonal modules
//! V_d(a,b,c) are built here; actions can also arise by pulling back DAHA
//! modules (see the `daha` module).  C is never free data in V_d: it is
//! defined through gamma by
//!     C = gamma/(q+q^-1) - (qAB - q^-1 BA)/(q^2 - q^-2),
//! so the defining relations become genuine checks, not tautologies.

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{inv, sqrt_exact, QContext, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AwParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AwAction {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub gamma: Matrix,
}

/// Outcome of checking the defining relations on a concrete action.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    /// The three relations "alpha/(q+q^-1) = A + (qBC - q^-1CB)/(q^2-q^-2)"
    /// and its cyclic shifts.
    pub defining: [bool; 3],
    /// alpha, beta, gamma commute with A, B, C.
    pub central: bool,
    /// The Casimir element commutes with A, B, C.  It acts as a scalar only
    /// when the module is irreducible, so scalarity is not part of `ok`.
    pub casimir_central: bool,
    /// Recorded when the Casimir does act as a scalar.
    pub casimir_scalar: Option<String>,
    pub ok: bool,
}

impl AwAction {
    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    /// C recovered from A, B and the central gamma.
    pub fn derive_c(a: &Matrix, b: &Matrix, gamma: &Matrix, ctx: &QContext) -> Matrix {
        let q = ctx.q();
        let qi = ctx.q_inv();
        let denom1 = q + qi;
        let denom2 = ctx.qpow(2) - ctx.qpow(-2);
        let bracket = a.mul(b).scale(q).sub(&b.mul(a).scale(qi));
        gamma
            .scale(&inv(&denom1))
            .sub(&bracket.scale(&inv(&denom2)))
    }

    /// The Casimir element
    /// qABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - qA alpha - q^-1 B beta - qC gamma.
    pub fn casimir(&self, ctx: &QContext) -> Matrix {
        let q = ctx.q();
        let qi = ctx.q_inv();
        let (a, b, c) = (&self.a, &self.b, &self.c);
        a.mul(b)
            .mul(c)
            .scale(q)
            .add(&a.mul(a).scale(&ctx.qpow(2)))
            .add(&b.mul(b).scale(&ctx.qpow(-2)))
            .add(&c.mul(c).scale(&ctx.qpow(2)))
            .sub(&a.mul(&self.alpha).scale(q))
            .sub(&b.mul(&self.beta).scale(qi))
            .sub(&c.mul(&self.gamma).scale(q))
    }

    pub fn check_relations(&self, ctx: &QContext) -> RelationReport {
        let q = ctx.q();
        let qi = ctx.q_inv();
        let denom1 = inv(&(q + qi));
        let denom2 = inv(&(ctx.qpow(2) - ctx.qpow(-2)));
        let rel = |x: &Matrix, y: &Matrix, z: &Matrix, central: &Matrix| -> bool {
            let bracket = y.mul(z).scale(q).sub(&z.mul(y).scale(qi));
            let lhs = central.scale(&denom1);
            let rhs = x.add(&bracket.scale(&denom2));
            lhs == rhs
        };
        let defining = [
            rel(&self.a, &self.b, &self.c, &self.alpha),
            rel(&self.b, &self.c, &self.a, &self.beta),
            rel(&self.c, &self.a, &self.b, &self.gamma),
        ];
        let gens = [&self.a, &self.b, &self.c];
        let central = [&self.alpha, &self.beta, &self.gamma]
            .iter()
            .all(|z| gens.iter().all(|g| z.commutes_with(g)));
        let casimir = self.casimir(ctx);
        let casimir_central = gens.iter().all(|g| casimir.commutes_with(g));
        let casimir_scalar = casimir
            .as_scalar_multiple_of_identity()
            .map(|s| crate::scalar::format_scalar(&s));
        let ok = defining.iter().all(|&x| x) && central && casimir_central;
        RelationReport {
            defining,
            central,
            casimir_central,
            casimir_scalar,
            ok,
        }
    }

    /// Twist by the order-2 automorphism: A <-> B, C -> C + (AB-BA)/(q-q^-1),
    /// alpha <-> beta.
    pub fn twist_z2(&self, ctx: &QContext) -> AwAction {
        let denom = inv(&(ctx.q() - ctx.q_inv()));
        let c = self
            .c
            .add(&self.a.commutator(&self.b).scale(&denom));
        AwAction {
            a: self.b.clone(),
            b: self.a.clone(),
            c,
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            gamma: self.gamma.clone(),
        }
    }
}

/// Build the (d+1)-dimensional bidiagonal module V_d(a,b,c).
pub fn build_vd(params: &AwParams, ctx: &QContext) -> Result<VdModule> {
    if params.a.is_zero() || params.b.is_zero() || params.c.is_zero() {
        return Err(Error::Argument("a, b, c must be nonzero".into()));
    }
    let d = params.d as i64;
    let n = params.d + 1;
    let (a, ai) = (&params.a, &inv(&params.a));
    let (b, bi) = (&params.b, &inv(&params.b));
    let (c, ci) = (&params.c, &inv(&params.c));

    let theta = |i: i64| a * ctx.qpow(2 * i - d) + ai * ctx.qpow(d - 2 * i);
    let theta_star = |i: i64| b * ctx.qpow(2 * i - d) + bi * ctx.qpow(d - 2 * i);
    let phi = |i: i64| {
        ai * bi
            * ctx.qpow(d + 1)
            * (ctx.qpow(i) - ctx.qpow(-i))
            * (ctx.qpow(i - d - 1) - ctx.qpow(d - i + 1))
            * (ctx.qpow(-i) - a * b * c * ctx.qpow(i - d - 1))
            * (ctx.qpow(-i) - a * b * ci * ctx.qpow(i - d - 1))
    };

    let mut ma = Matrix::zeros(n, n);
    let mut mb = Matrix::zeros(n, n);
    for i in 0..n {
        ma.set(i, i, theta(i as i64));
        mb.set(i, i, theta_star(i as i64));
        if i + 1 < n {
            ma.set(i + 1, i, Scalar::one());
            mb.set(i, i + 1, phi((i + 1) as i64));
        }
    }

    let dshift = ctx.qpow(d + 1) + ctx.qpow(-d - 1);
    let alpha = (b + bi) * (c + ci) + (a + ai) * &dshift;
    let beta = (c + ci) * (a + ai) + (b + bi) * &dshift;
    let gamma = (a + ai) * (b + bi) + (c + ci) * &dshift;

    let gamma_m = Matrix::scalar(n, &gamma);
    let mc = AwAction::derive_c(&ma, &mb, &gamma_m, ctx);
    let action = AwAction {
        a: ma,
        b: mb,
        c: mc,
        alpha: Matrix::scalar(n, &alpha),
        beta: Matrix::scalar(n, &beta),
        gamma: gamma_m,
    };
    Ok(VdModule {
        params: params.clone(),
        alpha,
        beta,
        gamma,
        action,
    })
}

#[derive(Debug, Clone)]
pub struct VdModule {
    pub params: AwParams,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub action: AwAction,
}

impl VdModule {
    /// Predicted eigenvalues of A and B on V_d: the theta_i and theta*_i.
    pub fn candidate_eigenvalues(&self, ctx: &QContext) -> Vec<Scalar> {
        let d = self.params.d as i64;
        let mut out = Vec::new();
        for (p, pi) in [
            (self.params.a.clone(), inv(&self.params.a)),
            (self.params.b.clone(), inv(&self.params.b)),
            (self.params.c.clone(), inv(&self.params.c)),
        ] {
            for i in 0..=d {
                out.push(&p * ctx.qpow(2 * i - d) + &pi * ctx.qpow(d - 2 * i));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Irreducibility criterion for V_d(a,b,c): none of abc, a^-1 bc, a b^-1 c,
/// a b c^-1 lies in {q^{2i-d-1} : i = 1..d}.
pub fn vd_is_irreducible(params: &AwParams, ctx: &QContext) -> bool {
    let d = params.d as i64;
    let (a, b, c) = (&params.a, &params.b, &params.c);
    let products = [
        a * b * c,
        inv(a) * b * c,
        a * inv(b) * c,
        a * b * inv(c),
    ];
    for i in 1..=d {
        let forbidden = ctx.qpow(2 * i - d - 1);
        if products.contains(&forbidden) {
            return false;
        }
    }
    true
}

/// Solve [d+1] x^2 - t x + [d+1] = 0 exactly; the two roots are mutually
/// inverse.  Fails with a rationality certificate if the discriminant is not
/// a perfect square.
pub fn trace_quadratic_roots(trace: &Scalar, d: usize, ctx: &QContext) -> Result<(Scalar, Scalar)> {
    let bracket = ctx.q_bracket(d as i64 + 1)?;
    if bracket.is_zero() {
        return Err(Error::Argument("[d+1]_q vanished".into()));
    }
    let disc = trace * trace - crate::scalar::int(4) * &bracket * &bracket;
    let root = sqrt_exact(&disc).ok_or_else(|| {
        Error::Irrational(format!(
            "trace quadratic discriminant {} is not a rational square",
            crate::scalar::format_scalar(&disc)
        ))
    })?;
    let two_b = crate::scalar::int(2) * &bracket;
    let r1 = (trace + &root) / &two_b;
    let r2 = (trace - &root) / &two_b;
    Ok((r1, r2))
}

/// Identify the parameters of an irreducible action from its traces: returns
/// (a, b, c) with each entry determined up to inversion.
pub fn trace_identify(action: &AwAction, ctx: &QContext) -> Result<(Scalar, Scalar, Scalar)> {
    let d = action.dim() - 1;
    let (a, _) = trace_quadratic_roots(&action.a.trace(), d, ctx)?;
    let (b, _) = trace_quadratic_roots(&action.b.trace(), d, ctx)?;
    let (c, _) = trace_quadratic_roots(&action.c.trace(), d, ctx)?;
    Ok((a, b, c))
}

/// Search for an invertible T with T A1 = A2 T, T B1 = B2 T, T C1 = C2 T.
/// The solution space is found exactly; for irreducible modules Schur's
/// lemma makes it at most one-dimensional, but we also probe small
/// combinations of kernel basis elements in the general case.
pub fn find_intertwiner(m1: &AwAction, m2: &AwAction) -> Option<Matrix> {
    let n = m1.dim();
    if m2.dim() != n {
        return None;
    }
    // Linear map T -> (T A1 - A2 T, ...) acting on vec(T), row-major.
    let pairs = [(&m1.a, &m2.a), (&m1.b, &m2.b), (&m1.c, &m2.c)];
    let mut big = Matrix::zeros(3 * n * n, n * n);
    for (block, (x1, x2)) in pairs.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = block * n * n + i * n + j;
                // (T X1)_{ij} = sum_k T_{ik} (X1)_{kj}
                for k in 0..n {
                    let v = big.at(row, i * n + k) + x1.at(k, j);
                    big.set(row, i * n + k, v);
                }
                // -(X2 T)_{ij} = -sum_k (X2)_{ik} T_{kj}
                for k in 0..n {
                    let v = big.at(row, k * n + j) - x2.at(i, k);
                    big.set(row, k * n + j, v);
                }
            }
        }
    }
    let kernel = big.kernel_basis();
    let unvec = |v: &[Scalar]| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone());
    let candidates: Vec<Matrix> = kernel.row_vecs().iter().map(|v| unvec(v)).collect();
    for t in &candidates {
        if t.inverse().is_some() {
            return Some(t.clone());
        }
    }
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            let t = candidates[i].add(&candidates[j]);
            if t.inverse().is_some() {
                return Some(t);
            }
        }
    }
    None
}
