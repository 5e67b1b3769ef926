//! Exact curved Koszul duality for (co)properads.
//!
//! The crate is organised bottom-up:
//!
//! * [`glinalg`]: rational scalars, Koszul signs, graded bases, 𝕊-bimodules.
//! * [`graphcalc`]: decorated graphs, canonical forms, grafting, the
//!   infinitesimal decomposition and (co)derivation extension.
//! * [`structures`]: semi-augmented dg properads, curved coproperads, lax
//!   morphisms, the convolution curved Lie algebra and twisting morphisms.
//! * [`barcobar`]: bar and cobar constructions and the adjunction bijections.
//! * [`fixtures`]: `uAs`, its curved Koszul dual and seeded random structures.
//! * [`cli`]: the `koszul` command line front end.

pub mod barcobar;
pub mod cli;
pub mod doc;
pub mod fixtures;
pub mod glinalg;
pub mod graphcalc;
pub mod structures;

pub use glinalg::Scalar;
pub use graphcalc::{FormalSum, Graph, TruncationPolicy};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("mode error: {0}")]
    Mode(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
