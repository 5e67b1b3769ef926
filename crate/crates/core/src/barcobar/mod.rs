//! Bar and cobar constructions and the adjunction bijections.

pub mod adjunction;
pub mod bar;
pub mod cobar;

pub use bar::{bar, bar_with_signs, BarSigns, BAR_SIGNS};
pub use cobar::{cobar, cobar_with_signs, CobarSigns, COBAR_SIGNS};
pub use adjunction::{
    adjoint_left, adjoint_right, bar_morphism, check_factorization, cobar_morphism, from_left, from_right, iota, pi,
};
