//! Exact-arithmetic engine for Askey-Wilson algebra modules obtained by
//! pulling finite-dimensional DAHA modules of type (C1v, C1) back along the
//! algebra embedding, together with a complete and certified computation of
//! their submodule lattices.
//!
//! Everything runs over the rational field with a fixed rational deformation
//! parameter q (default q = 2); no floating point, no numerical tolerance.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod subspace;
pub mod eigen;
pub mod aw;
pub mod daha;
pub mod lattice;
pub mod verdict;
pub mod report;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{QContext, Scalar};
pub use subspace::Subspace;
