//! Algebraic structures: properads, curved coproperads, their morphisms and
//! the convolution curved Lie algebra.

pub mod convolution;
pub mod coproperad;
pub mod lax;
pub mod maps;
pub mod morphism;
pub mod properad;
pub mod report;

pub use convolution::{check_curved_lie, check_twisting, convolution, ConvolutionCLA, CurvedLieAlgebra, TwistingMorphism};
pub use coproperad::{check_curved_coproperad, CoKind, CurvedCoproperad};
pub use lax::{check_lax, compose_lax, tw_pullback, LaxMorphism};
pub use maps::{LinearMap, ScalarMap};
pub use morphism::{compose_prop, tw_pushforward, PropMorphism};
pub use properad::{PropKind, SemiAugProperad};
pub use report::{CheckReport, Location, Status};
