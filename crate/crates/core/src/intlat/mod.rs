//! Exact integer linear algebra: determinants, adjugates, definiteness,
//! Smith normal form, cokernels and GF(2) solving.
//!
//! All routines are generic over [`ExactInt`](crate::ExactInt); the rest of the
//! crate instantiates them at [`BigInt`](num_bigint::BigInt) through
//! [`IntMatrix`](crate::IntMatrix).

mod det;
mod matrix;
mod mod2;
mod smith;

pub use det::{adjugate, determinant, is_negative_definite, leading_principal_minors};
pub use matrix::{bilinear, Matrix};
pub use mod2::solve_mod2;
pub use smith::{cokernel, smith_normal_form, AbelianGroupStructure, Cokernel, SmithDecomposition};
