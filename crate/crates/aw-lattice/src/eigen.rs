//! Characteristic polynomials and certified rational eigenvalue extraction.
//!
//! The engine never guesses: an operator's spectrum is only reported when its
//! characteristic polynomial provably splits into linear factors over Q.  We
//! first deflate by a caller-supplied candidate list (the structure of the
//! modules predicts every eigenvalue that can occur), then fall back to
//! rational-root trial division; if a nonlinear factor survives, the split
//! fails and the caller reports the situation instead of approximating.

use num::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Coefficients low-to-high: p[0] + p[1] x + ... + p[n] x^n.
pub type Poly = Vec<Scalar>;

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion
/// (exact, division only by small integers).
pub fn char_poly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    // c[n] = 1; M_1 = M, c_{n-k} = -tr(M A_{k-1} + c ...) standard recursion.
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut aux = Matrix::identity(n);
    for k in 1..=n {
        aux = m.mul(&aux);
        let c = -aux.trace() / crate::scalar::int(k as i64);
        coeffs[n - k] = c.clone();
        for i in 0..n {
            let v = aux.at(i, i) + &c;
            aux.set(i, i, v);
        }
    }
    coeffs
}

pub fn eval_poly(p: &Poly, x: &Scalar) -> Scalar {
    p.iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Divide p by (x - r); panics unless r is an exact root.
pub fn deflate(p: &Poly, r: &Scalar) -> Poly {
    let n = p.len() - 1;
    let mut q = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * r;
        q[i] = carry.clone();
    }
    let rem = &p[0] + &carry * r;
    assert!(rem.is_zero(), "deflation by a non-root");
    q
}

/// Rational roots of p by the rational-root theorem (p must have rational,
/// hence clearable-to-integer, coefficients).  Used as a fallback when the
/// candidate list misses a root.
fn rational_roots_by_trial(p: &Poly) -> Vec<Scalar> {
    use num::bigint::BigInt;
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in p {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let lead = ints.last().cloned().unwrap_or_else(BigInt::zero);
    let konst = ints.iter().find(|c| !c.is_zero()).cloned();
    let (Some(konst), false) = (konst, lead.is_zero()) else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    for pn in divisors(&konst.abs()) {
        for qd in divisors(&lead.abs()) {
            for sign in [1i64, -1] {
                let cand = Scalar::new(&pn * BigInt::from(sign), qd.clone());
                if eval_poly(p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    if eval_poly(p, &Scalar::zero()).is_zero() {
        roots.push(Scalar::zero());
    }
    roots
}

/// All positive divisors by trial division.  Coefficients stay small enough
/// in the fallback path (the candidate list catches structured eigenvalues)
/// that this is acceptable; we cap the search to keep pathological inputs
/// from hanging, returning a partial list (the split then simply fails).
fn divisors(n: &num::bigint::BigInt) -> Vec<num::bigint::BigInt> {
    use num::bigint::BigInt;
    let limit = BigInt::from(1_000_000u64);
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n && d <= limit {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Try to split p into linear factors over Q.  Returns (root, multiplicity)
/// pairs summing to deg p, or None if an irreducible nonlinear factor
/// remains.  `candidates` is tried before generic trial division.
pub fn split_rational_roots(p: &Poly, candidates: &[Scalar]) -> Option<Vec<(Scalar, usize)>> {
    let mut rem = p.clone();
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    'outer: while rem.len() > 1 {
        for c in candidates.iter() {
            if eval_poly(&rem, c).is_zero() {
                rem = deflate(&rem, c);
                bump(&mut roots, c);
                continue 'outer;
            }
        }
        for c in rational_roots_by_trial(&rem) {
            if eval_poly(&rem, &c).is_zero() {
                rem = deflate(&rem, &c);
                bump(&mut roots, &c);
                continue 'outer;
            }
        }
        return None;
    }
    Some(roots)
}

fn bump(roots: &mut Vec<(Scalar, usize)>, r: &Scalar) {
    if let Some(entry) = roots.iter_mut().find(|(x, _)| x == r) {
        entry.1 += 1;
    } else {
        roots.push((r.clone(), 1));
    }
}

/// Eigenspace of M for eigenvalue lambda, as the kernel of (M - lambda I).
pub fn eigenspace(m: &Matrix, lambda: &Scalar) -> crate::subspace::Subspace {
    let shifted = m.sub(&Matrix::scalar(m.rows(), lambda));
    crate::subspace::Subspace::from_row_space(&shifted.kernel_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn char_poly_of_diagonal() {
        let m = Matrix::from_rows(vec![
            vec![int(2), int(0)],
            vec![int(0), int(3)],
        ]);
        // (x-2)(x-3) = 6 - 5x + x^2
        assert_eq!(char_poly(&m), vec![int(6), int(-5), int(1)]);
    }

    #[test]
    fn split_with_candidates_and_fallback() {
        // (x - 1/2)(x + 3)^2
        let p = char_poly(&Matrix::from_rows(vec![
            vec![frac(1, 2), int(0), int(0)],
            vec![int(0), int(-3), int(1)],
            vec![int(0), int(0), int(-3)],
        ]));
        let roots = split_rational_roots(&p, &[frac(1, 2)]).unwrap();
        let mut roots = roots;
        roots.sort();
        assert_eq!(roots, vec![(int(-3), 2), (frac(1, 2), 1)]);
    }

    #[test]
    fn irrational_spectrum_is_refused() {
        // x^2 - 2 has no rational roots.
        let m = Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(1), int(0)]]);
        assert!(split_rational_roots(&char_poly(&m), &[]).is_none());
    }

    #[test]
    fn eigenspace_dimension() {
        let m = Matrix::from_rows(vec![
            vec![int(5), int(0), int(0)],
            vec![int(0), int(5), int(0)],
            vec![int(0), int(0), int(7)],
        ]);
        assert_eq!(eigenspace(&m, &int(5)).dim(), 2);
        assert_eq!(eigenspace(&m, &int(7)).dim(), 1);
        assert_eq!(eigenspace(&m, &int(1)).dim(), 0);
    }

    #[test]
    fn deflate_round_trip() {
        let p = vec![int(-6), int(11), int(-6), int(1)]; // (x-1)(x-2)(x-3)
        let q = deflate(&p, &int(2));
        assert_eq!(eval_poly(&q, &int(1)), int(0));
        assert_eq!(eval_poly(&q, &int(3)), int(0));
        assert_eq!(q.len(), 3);
    }
}
