//! Exact rational scalars and the q-context.
//!
//! Every scalar in the engine is a `BigRational`: arbitrary-precision
//! numerator and denominator, always stored in lowest terms with positive
//! denominator.  No floating point appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Multiplicative inverse.  Panics on zero; callers validate nonzero-ness.
pub fn inv(x: &Scalar) -> Scalar {
    assert!(!x.is_zero(), "inverse of zero");
    x.recip()
}

/// Integer power with negative exponents allowed (x must be nonzero if e < 0).
pub fn pow(x: &Scalar, e: i64) -> Scalar {
    if e == 0 {
        return Scalar::one();
    }
    let base = if e < 0 { inv(x) } else { x.clone() };
    let mut acc = Scalar::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Exact rational square root, if one exists.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Parse "n/d" or "n" into a scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Argument(format!("bad numerator in scalar '{s}'")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Argument(format!("bad denominator in scalar '{s}'")))?;
    if d.is_zero() {
        return Err(Error::Argument(format!("zero denominator in scalar '{s}'")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical serialization: always "num/den" with positive denominator.
pub fn format_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// The fixed deformation parameter q, with q nonzero and |q| != 1 so that q
/// is never a root of unity in the rational field.
#[derive(Debug, Clone)]
pub struct QContext {
    q: Scalar,
    q_inv: Scalar,
}

impl QContext {
    pub fn new(q: Scalar) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Argument("q must be nonzero".into()));
        }
        if q.abs().is_one() {
            return Err(Error::Argument("|q| must not equal 1".into()));
        }
        let q_inv = inv(&q);
        Ok(QContext { q, q_inv })
    }

    pub fn default_q() -> Self {
        QContext::new(int(2)).expect("q=2 is valid")
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn q_inv(&self) -> &Scalar {
        &self.q_inv
    }

    pub fn qpow(&self, e: i64) -> Scalar {
        pow(&self.q, e)
    }

    /// The q-integer [n]_q = (q^n - q^-n)/(q - q^-1) for n >= 0.
    pub fn q_bracket(&self, n: i64) -> Result<Scalar> {
        if n < 0 {
            return Err(Error::Argument(format!("q_bracket needs n >= 0, got {n}")));
        }
        let num = self.qpow(n) - self.qpow(-n);
        let den = &self.q - &self.q_inv;
        Ok(num / den)
    }
}

pub fn q_bracket(n: i64, ctx: &QContext) -> Result<Scalar> {
    ctx.q_bracket(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_bracket_small_values() {
        let ctx = QContext::default_q();
        assert_eq!(q_bracket(0, &ctx).unwrap(), int(0));
        assert_eq!(q_bracket(1, &ctx).unwrap(), int(1));
        assert_eq!(q_bracket(2, &ctx).unwrap(), frac(5, 2));
        assert!(q_bracket(-1, &ctx).is_err());
    }

    #[test]
    fn qcontext_rejects_bad_q() {
        assert!(QContext::new(int(0)).is_err());
        assert!(QContext::new(int(1)).is_err());
        assert!(QContext::new(int(-1)).is_err());
        assert!(QContext::new(frac(1, 2)).is_ok());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let x = frac(2, 3);
        assert_eq!(pow(&x, 2), frac(4, 9));
        assert_eq!(pow(&x, -2), frac(9, 4));
        assert_eq!(pow(&x, 0), int(1));
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
    }

    #[test]
    fn scalar_round_trip() {
        let x = frac(-7, 12);
        assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        assert_eq!(parse_scalar("5").unwrap(), int(5));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
