//! Ready-made structures: `uAs`, its curved Koszul dual and seeded random
//! families.

pub mod catalog;
pub mod matrix;
pub mod negative;
pub mod random;
pub mod uas;
pub mod uas_dual;

pub use matrix::{matrix_properad, random_conjugation, random_conjugation_with_data, random_matrix_data, random_sdg_properad, MatrixData};
pub use uas::{planar_value, uas};
pub use negative::{curvature_mismatch, d_squared_nonzero, non_associative, one_cogenerator};
pub use random::{random_bar_lax, random_curved_coproperad, random_lax, random_matrix_properad, random_twisting, twist};
pub use uas_dual::{g_kappa, kappa, m_tilde, uas_koszul_dual};
