//! Exact scalars, Koszul signs, graded bases and 𝕊-bimodules.

pub mod bimodule;
pub mod matrix;
pub mod scalar;
pub mod sign;

pub use bimodule::{compose_smap, suspend, suspend_smap, Biarity, GradedBasisSpace, SBimodule, SMap, Side};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use sign::{koszul_sign, koszul_sign_1based};
