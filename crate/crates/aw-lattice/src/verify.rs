//! The verification corpus: seeded batteries of instances exercising every
//! claim the engine certifies — relation checks, the Casimir image identity,
//! lattice shapes, factor identification, irreducibility criteria against
//! brute-force search, the structure corollaries, twist identities, and the
//! randomized algebraic property suite.
//!
//! Each battery returns a `CriterionResult` with a one-line summary, so the
//! CLI and the integration tests share a single source of truth.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aw::{build_vd, find_intertwiner, vd_is_irreducible, AwParams};
use crate::daha::{build, h_is_irreducible, Family, HParams};
use crate::eigen::{char_poly, eigenspace, split_rational_roots};
use crate::error::{Error, Result};
use crate::lattice::{
    all_submodules, brute_force_submodules, full_lattice, is_irreducible, DeltaModule,
};
use crate::matrix::Matrix;
use crate::sample::{SampleMode, Sampler};
use crate::scalar::{frac, QContext, Scalar};
use crate::subspace::{spin, Subspace};
use crate::verdict::{verify_instance, InstanceVerdict, Status};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{}: {} ({})",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// One family/degree/twist/mode combination of the corpus.
#[derive(Debug, Clone, Copy)]
pub struct Case {
    pub family: Family,
    pub d: usize,
    pub twist: u8,
    pub mode: SampleMode,
}

/// Cases for the relation and Casimir batteries: every family/twist with
/// the full degree ladder.
pub fn relation_cases(dmax: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for d in [1, 3, 5, 7] {
        if d > dmax {
            continue;
        }
        for twist in 0..4 {
            out.push(Case {
                family: Family::E,
                d,
                twist,
                mode: SampleMode::Generic,
            });
        }
    }
    for d in [0, 2, 4, 6] {
        if d > dmax {
            continue;
        }
        out.push(Case {
            family: Family::O,
            d,
            twist: 0,
            mode: SampleMode::Generic,
        });
    }
    out
}

/// Cases for the lattice-shape battery: each classified configuration.
pub fn shape_cases(dmax: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for d in [1, 3, 5, 7] {
        if d > dmax {
            continue;
        }
        out.push(Case {
            family: Family::E,
            d,
            twist: 0,
            mode: SampleMode::Generic,
        });
        for twist in 1..4u8 {
            out.push(Case {
                family: Family::E,
                d,
                twist,
                mode: SampleMode::Generic,
            });
            out.push(Case {
                family: Family::E,
                d,
                twist,
                mode: SampleMode::DegenerateK(twist as usize),
            });
        }
    }
    for d in [0, 2, 4, 6] {
        if d > dmax {
            continue;
        }
        out.push(Case {
            family: Family::O,
            d,
            twist: 0,
            mode: SampleMode::Generic,
        });
        if d > 0 {
            out.push(Case {
                family: Family::O,
                d,
                twist: 0,
                mode: SampleMode::DegenerateK(0),
            });
        }
    }
    out
}

fn case_instances(case: &Case, n: usize, seed: u64, ctx: &QContext) -> Result<Vec<HParams>> {
    let mut sampler = Sampler::new(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let spec = sampler.sample_h(case.family, case.d, case.twist, case.mode, ctx)?;
        out.push(spec.h_params(ctx)?);
    }
    Ok(out)
}

/// Battery 1: defining relations of both algebras on sampled instances,
/// with a per-instance time budget in milliseconds.
pub fn verify_relations(n: usize, dmax: usize, seed: u64, ctx: &QContext) -> CriterionResult {
    let mut checked = 0usize;
    let mut failed = 0usize;
    let mut max_ms = 0u128;
    for case in relation_cases(dmax) {
        let instances = match case_instances(&case, n, seed, ctx) {
            Ok(v) => v,
            Err(e) => {
                return CriterionResult {
                    name: "relations".into(),
                    passed: false,
                    detail: format!("sampling failed: {e}"),
                }
            }
        };
        for params in instances {
            let t = Instant::now();
            let ok = match build(&params, ctx) {
                Ok(h) => {
                    let h = h.twist_z4(case.twist);
                    h.check_relations(ctx).ok && h.pullback(ctx).check_relations(ctx).ok
                }
                Err(_) => false,
            };
            max_ms = max_ms.max(t.elapsed().as_millis());
            checked += 1;
            if !ok {
                failed += 1;
            }
        }
    }
    CriterionResult {
        name: "relations".into(),
        passed: failed == 0 && max_ms < 1000,
        detail: format!("{checked} instances, {failed} failures, max {max_ms} ms"),
    }
}

/// Battery 2: the closed-form image of the Casimir element agrees with the
/// Casimir of the pulled-back action, as an exact matrix identity.
pub fn verify_casimir(n: usize, dmax: usize, seed: u64, ctx: &QContext) -> CriterionResult {
    let mut checked = 0usize;
    let mut failed = 0usize;
    for case in relation_cases(dmax) {
        let instances = match case_instances(&case, n, seed, ctx) {
            Ok(v) => v,
            Err(e) => {
                return CriterionResult {
                    name: "casimir".into(),
                    passed: false,
                    detail: format!("sampling failed: {e}"),
                }
            }
        };
        for params in instances {
            let ok = match build(&params, ctx) {
                Ok(h) => {
                    let h = h.twist_z4(case.twist);
                    h.pullback(ctx).casimir(ctx) == h.casimir_image(ctx)
                }
                Err(_) => false,
            };
            checked += 1;
            if !ok {
                failed += 1;
            }
        }
    }
    CriterionResult {
        name: "casimir".into(),
        passed: failed == 0,
        detail: format!("{checked} instances, {failed} failures"),
    }
}

/// Run the full classification pipeline on the shape corpus, returning the
/// verdicts for reuse by the shape, factor, and corollary batteries.
pub fn run_shape_corpus(
    n: usize,
    dmax: usize,
    seed: u64,
    ctx: &QContext,
) -> Result<Vec<(Case, InstanceVerdict, u128)>> {
    let mut out = Vec::new();
    for case in shape_cases(dmax) {
        for params in case_instances(&case, n, seed, ctx)? {
            let h = build(&params, ctx)?.twist_z4(case.twist);
            let t = Instant::now();
            let v = verify_instance(&h, ctx)?;
            out.push((case, v, t.elapsed().as_millis()));
        }
    }
    Ok(out)
}

/// Battery 3: computed lattice shapes and intermediate dimensions match the
/// classification on every corpus instance, within the time budget.
pub fn verify_shapes(corpus: &[(Case, InstanceVerdict, u128)]) -> CriterionResult {
    let failed = corpus
        .iter()
        .filter(|(_, v, _)| v.status != Status::Confirmed || !v.shape_ok)
        .count();
    let max_ms = corpus.iter().map(|(_, _, ms)| *ms).max().unwrap_or(0);
    CriterionResult {
        name: "lattice-shapes".into(),
        passed: failed == 0 && max_ms < 5000 && !corpus.is_empty(),
        detail: format!(
            "{} instances, {failed} failures, max {max_ms} ms",
            corpus.len()
        ),
    }
}

/// Battery 4: every composition factor is identified by exact traces and an
/// explicit invertible intertwiner.
pub fn verify_factors(corpus: &[(Case, InstanceVerdict, u128)]) -> CriterionResult {
    let mut factors = 0usize;
    let mut failed = 0usize;
    for (_, v, _) in corpus {
        for f in &v.factors {
            factors += 1;
            if !f.ok() {
                failed += 1;
            }
        }
    }
    CriterionResult {
        name: "factor-identification".into(),
        passed: failed == 0 && factors > 0,
        detail: format!("{factors} factors, {failed} failures"),
    }
}

/// Battery 6: the structure corollaries across the shape corpus — quotients
/// by t0-eigenspaces are zero or irreducible, and complete reducibility is
/// equivalent to t0 being diagonalizable.
pub fn verify_corollaries(corpus: &[(Case, InstanceVerdict, u128)]) -> CriterionResult {
    let failed = corpus
        .iter()
        .filter(|(_, v, _)| {
            !(v.summary.quotients_irreducible_or_zero && v.summary.complete_reducibility_iff_diag)
        })
        .count();
    CriterionResult {
        name: "corollaries".into(),
        passed: failed == 0 && !corpus.is_empty(),
        detail: format!("{} instances, {failed} failures", corpus.len()),
    }
}

/// A standalone bidiagonal module as a lattice-engine input.
fn vd_module(params: &AwParams, ctx: &QContext) -> Result<DeltaModule> {
    let m = build_vd(params, ctx)?;
    let candidates = m.candidate_eigenvalues(ctx);
    Ok(DeltaModule::from_action(m.action, candidates))
}

/// Exhaustive submodule search valid when A acts with d+1 distinct rational
/// eigenvalues: every invariant subspace is then a span of A-eigenvectors.
/// Returns None when the spectrum assumption fails.
fn complete_brute_force(module: &DeltaModule) -> Option<bool> {
    let n = module.dim();
    let a = &module.action.a;
    let cp = char_poly(a);
    let roots = split_rational_roots(&cp, &module.candidates)?;
    if roots.len() != n || roots.iter().any(|(_, m)| *m != 1) {
        return None;
    }
    let mut pool: Vec<Vec<Scalar>> = Vec::new();
    for (r, _) in &roots {
        let es = eigenspace(a, r);
        if es.dim() != 1 {
            return None;
        }
        pool.push(es.basis_rows().remove(0));
    }
    let ops = [&module.action.a, &module.action.b, &module.action.c];
    let subs = brute_force_submodules(&ops, &pool, n);
    Some(subs.len() == 2)
}

/// Reducibility witness search for the full-algebra action: spin every
/// rational eigenvector of the two bidiagonal generators under all of
/// {A, B, C, t0..t3}; a proper nonzero closure proves reducibility (it never
/// proves irreducibility).
fn spins_find_proper_h_submodule(module: &DeltaModule, t: &[Matrix; 4]) -> bool {
    let n = module.dim();
    let mut ops: Vec<&Matrix> = vec![&module.action.a, &module.action.b, &module.action.c];
    ops.extend(t.iter());
    for op in [&module.action.a, &module.action.b] {
        let cp = char_poly(op);
        let Some(roots) = split_rational_roots(&cp, &module.candidates) else {
            continue;
        };
        for (r, _) in roots {
            for v in eigenspace(op, &r).basis_rows() {
                let s = spin(n, &[v], &ops);
                if !s.is_zero() && !s.is_full() {
                    return true;
                }
            }
        }
    }
    false
}

/// Battery 5: irreducibility criteria agree with brute-force search for all
/// three module kinds, on both sides of the criterion.
pub fn verify_irreducibility(n_each: usize, seed: u64, ctx: &QContext) -> CriterionResult {
    let mut sampler = Sampler::new(seed);
    let mut satisfying = 0usize;
    let mut violating = 0usize;
    let mut failed = 0usize;
    let run = |want_irreducible: bool,
                   sampler: &mut Sampler,
                   satisfying: &mut usize,
                   violating: &mut usize,
                   failed: &mut usize|
     -> Result<()> {
        let mode = if want_irreducible {
            SampleMode::Generic
        } else {
            SampleMode::Violate
        };
        // Bidiagonal modules: complete search over A-eigenvector spans.
        for d in 1..=6usize {
            for _ in 0..n_each.div_ceil(6) {
                let spec = sampler.sample_vd(d, mode, ctx)?;
                let params = spec.vd_params()?;
                let module = vd_module(&params, ctx)?;
                let Some(brute_irr) = complete_brute_force(&module) else {
                    continue; // spectrum assumption failed; draw another
                };
                let agree = brute_irr == vd_is_irreducible(&params, ctx)
                    && brute_irr == is_irreducible(&module)?;
                if brute_irr {
                    *satisfying += 1;
                } else {
                    *violating += 1;
                }
                if !agree || brute_irr != want_irreducible {
                    *failed += 1;
                }
            }
        }
        // DAHA families: a submodule for the full algebra is in particular a
        // submodule for the embedded subalgebra, so enumerate the certified
        // subalgebra lattice and keep the nodes invariant under every t_i.
        for (family, d) in [(Family::E, 5usize), (Family::O, 4), (Family::O, 6)] {
            for _ in 0..n_each.div_ceil(3) {
                let spec = sampler.sample_h(family, d, 0, mode, ctx)?;
                let params = spec.h_params(ctx)?;
                let h = build(&params, ctx)?;
                let (module, _) = DeltaModule::from_pullback(&h, ctx)?;
                let criterion = h_is_irreducible(&params, ctx);
                let t_invariant = |s: &Subspace| h.t.iter().all(|t| s.is_invariant_under(t));
                let search_irr = match all_submodules(&module) {
                    Ok(subs) => !subs
                        .iter()
                        .any(|s| !s.is_zero() && !s.is_full() && t_invariant(s)),
                    Err(Error::Inconclusive(_)) => {
                        !spins_find_proper_h_submodule(&module, &h.t)
                    }
                    Err(e) => return Err(e),
                };
                if criterion {
                    *satisfying += 1;
                } else {
                    *violating += 1;
                }
                if criterion != search_irr || criterion != want_irreducible {
                    *failed += 1;
                }
            }
        }
        Ok(())
    };
    for want in [true, false] {
        if let Err(e) = run(
            want,
            &mut sampler,
            &mut satisfying,
            &mut violating,
            &mut failed,
        ) {
            return CriterionResult {
                name: "irreducibility".into(),
                passed: false,
                detail: format!("corpus error: {e}"),
            };
        }
    }
    CriterionResult {
        name: "irreducibility".into(),
        passed: failed == 0 && satisfying >= 10 && violating >= 10,
        detail: format!(
            "{satisfying} satisfying, {violating} violating, {failed} disagreements"
        ),
    }
}

/// Battery 7: the parameter-swap twist is witnessed by an invertible
/// intertwiner, and four quarter-twists compose to the identity.
pub fn verify_twists(n: usize, seed: u64, ctx: &QContext) -> CriterionResult {
    let mut sampler = Sampler::new(seed);
    let mut checked = 0usize;
    let mut failed = 0usize;
    // Swap twist on irreducible bidiagonal modules.
    for d in 1..=4usize {
        for _ in 0..n.div_ceil(4) {
            let Ok(spec) = sampler.sample_vd(d, SampleMode::Generic, ctx) else {
                failed += 1;
                continue;
            };
            let Ok(params) = spec.vd_params() else {
                failed += 1;
                continue;
            };
            let swapped = AwParams {
                a: params.b.clone(),
                b: params.a.clone(),
                c: params.c.clone(),
                d,
            };
            let ok = match (build_vd(&params, ctx), build_vd(&swapped, ctx)) {
                (Ok(m1), Ok(m2)) => {
                    let twisted = m1.action.twist_z2(ctx);
                    find_intertwiner(&twisted, &m2.action).is_some()
                }
                _ => false,
            };
            checked += 1;
            if !ok {
                failed += 1;
            }
        }
    }
    // Quarter-twist composition on DAHA modules.
    for (family, d) in [(Family::E, 3usize), (Family::O, 4)] {
        let Ok(spec) = sampler.sample_h(family, d, 0, SampleMode::Generic, ctx) else {
            return CriterionResult {
                name: "twists".into(),
                passed: false,
                detail: "sampling failed".into(),
            };
        };
        let params = spec.h_params(ctx).unwrap();
        let h = build(&params, ctx).unwrap();
        let back = h.twist_z4(1).twist_z4(1).twist_z4(1).twist_z4(1);
        checked += 1;
        if back.t != h.t || back.twist != h.twist {
            failed += 1;
        }
    }
    CriterionResult {
        name: "twists".into(),
        passed: failed == 0 && checked >= 12,
        detail: format!("{checked} checks, {failed} failures"),
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| frac(rng.gen_range(-4..=4i64), 1))
}

/// Battery 8: randomized algebraic property suite — spin idempotence,
/// rank-nullity, sum/intersection closure laws, and invariance of the
/// composition-factor dimension multiset across maximal chains.
pub fn verify_properties(cases: usize, seed: u64, ctx: &QContext) -> CriterionResult {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed = 0usize;
    let mut ran = 0usize;

    // Spin idempotence and invariance.
    for _ in 0..(3 * cases / 10) {
        ran += 1;
        let n = rng.gen_range(2..=4usize);
        let ops_owned: Vec<Matrix> = (0..2).map(|_| random_matrix(&mut rng, n)).collect();
        let ops: Vec<&Matrix> = ops_owned.iter().collect();
        let seed_vec: Vec<Scalar> = (0..n).map(|_| frac(rng.gen_range(-3..=3i64), 1)).collect();
        let s = spin(n, &[seed_vec], &ops);
        let again = spin(n, &s.basis_rows(), &ops);
        if s != again || !ops.iter().all(|op| s.is_invariant_under(op)) {
            failed += 1;
        }
    }

    // Rank-nullity.
    for _ in 0..(3 * cases / 10) {
        ran += 1;
        let n = rng.gen_range(2..=5usize);
        let m = random_matrix(&mut rng, n);
        let rank = m.rank();
        let nullity = m.kernel_basis().rows();
        if rank + nullity != n {
            failed += 1;
        }
    }

    // Dimension formula and absorption laws for sum and intersection.
    for _ in 0..(3 * cases / 10) {
        ran += 1;
        let n = rng.gen_range(2..=5usize);
        let rows_u: Vec<Vec<Scalar>> = (0..rng.gen_range(1..=n))
            .map(|_| (0..n).map(|_| frac(rng.gen_range(-3..=3i64), 1)).collect())
            .collect();
        let rows_w: Vec<Vec<Scalar>> = (0..rng.gen_range(1..=n))
            .map(|_| (0..n).map(|_| frac(rng.gen_range(-3..=3i64), 1)).collect())
            .collect();
        let u = Subspace::from_spanning(n, &rows_u);
        let w = Subspace::from_spanning(n, &rows_w);
        let s = u.sum(&w);
        let i = u.intersect(&w);
        let dims_ok = u.dim() + w.dim() == s.dim() + i.dim();
        let absorb_ok = s.intersect(&u) == u && u.sum(&i) == u;
        if !(dims_ok && absorb_ok) {
            failed += 1;
        }
    }

    // Composition-factor dimension multisets across small real lattices.
    let mut sampler = Sampler::new(seed);
    while ran < cases {
        ran += 1;
        let (family, d, twist, mode) = match rng.gen_range(0..3) {
            0 => (Family::E, 3usize, 0u8, SampleMode::Generic),
            1 => (Family::E, 3, 1, SampleMode::DegenerateK(1)),
            _ => (Family::O, 2, 0, SampleMode::Generic),
        };
        let ok = (|| -> Result<bool> {
            let spec = sampler.sample_h(family, d, twist, mode, ctx)?;
            let h = build(&spec.h_params(ctx)?, ctx)?.twist_z4(twist);
            let (module, _) = DeltaModule::from_pullback(&h, ctx)?;
            let lat = full_lattice(&module)?;
            Ok(lat.jh_consistent && lat.closed)
        })()
        .unwrap_or(false);
        if !ok {
            failed += 1;
        }
    }

    let ms = t.elapsed().as_millis();
    CriterionResult {
        name: "property-suite".into(),
        passed: failed == 0 && ran >= cases && ms < 60_000,
        detail: format!("{ran} cases, {failed} failures, {ms} ms"),
    }
}

/// Which batteries to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Relations,
    Casimir,
    Shapes,
    Factors,
    Irreducibility,
    Corollaries,
    Twists,
    Properties,
}

impl Scope {
    pub fn parse(s: &str) -> Result<Scope> {
        match s {
            "all" => Ok(Scope::All),
            "relations" => Ok(Scope::Relations),
            "casimir" => Ok(Scope::Casimir),
            "shapes" => Ok(Scope::Shapes),
            "factors" => Ok(Scope::Factors),
            "irreducibility" => Ok(Scope::Irreducibility),
            "corollaries" => Ok(Scope::Corollaries),
            "twists" => Ok(Scope::Twists),
            "properties" => Ok(Scope::Properties),
            other => Err(Error::Argument(format!(
                "unknown scope {other:?} (expected all, relations, casimir, shapes, \
                 factors, irreducibility, corollaries, twists, properties)"
            ))),
        }
    }
}

/// Run the requested batteries with the given per-case sample count.
pub fn run_verification(
    scope: Scope,
    n: usize,
    dmax: usize,
    seed: u64,
    ctx: &QContext,
) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    let want = |s: Scope| scope == Scope::All || scope == s;
    if want(Scope::Relations) {
        out.push(verify_relations(n, dmax, seed, ctx));
    }
    if want(Scope::Casimir) {
        out.push(verify_casimir(n, dmax, seed, ctx));
    }
    if want(Scope::Shapes) || want(Scope::Factors) || want(Scope::Corollaries) {
        match run_shape_corpus(n, dmax, seed, ctx) {
            Ok(corpus) => {
                if want(Scope::Shapes) {
                    out.push(verify_shapes(&corpus));
                }
                if want(Scope::Factors) {
                    out.push(verify_factors(&corpus));
                }
                if want(Scope::Corollaries) {
                    out.push(verify_corollaries(&corpus));
                }
            }
            Err(e) => out.push(CriterionResult {
                name: "lattice-shapes".into(),
                passed: false,
                detail: format!("corpus failed: {e}"),
            }),
        }
    }
    if want(Scope::Irreducibility) {
        out.push(verify_irreducibility(n.max(4), seed, ctx));
    }
    if want(Scope::Twists) {
        out.push(verify_twists(n.max(10), seed, ctx));
    }
    if want(Scope::Properties) {
        out.push(verify_properties(100 * n.max(1), seed, ctx));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verification_sweep_passes() {
        let ctx = QContext::default_q();
        let corpus = run_shape_corpus(1, 3, 11, &ctx).unwrap();
        assert!(verify_shapes(&corpus).passed, "{:?}", verify_shapes(&corpus));
        assert!(verify_factors(&corpus).passed);
        assert!(verify_corollaries(&corpus).passed);
    }

    #[test]
    fn relation_sweep_passes() {
        let ctx = QContext::default_q();
        let r = verify_relations(1, 3, 5, &ctx);
        assert!(r.passed, "{}", r.line());
        let c = verify_casimir(1, 3, 5, &ctx);
        assert!(c.passed, "{}", c.line());
    }

    #[test]
    fn twist_battery_passes() {
        let ctx = QContext::default_q();
        let r = verify_twists(10, 3, &ctx);
        assert!(r.passed, "{}", r.line());
    }

    #[test]
    fn property_battery_passes() {
        let ctx = QContext::default_q();
        let r = verify_properties(40, 9, &ctx);
        assert!(r.passed, "{}", r.line());
    }
}
