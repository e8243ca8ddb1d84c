//! Exact calculator for classes of moduli spaces in the Grothendieck ring of
//! Chow motives generated by a curve, together with their Hodge and Poincaré
//! realizations.
//!
//! The crate covers rank-3 vector bundles ([`bundles`]), rank-2 pairs through
//! three independent routes ([`pairs`]), and rank-3 Higgs bundles assembled
//! from the fixed loci of the scaling action ([`higgs`]).

pub mod bundles;
pub mod cli;
pub mod error;
pub mod higgs;
pub mod hodge;
pub mod motive;
pub mod pairs;
pub mod polyring;
pub mod verify;

pub use error::{Error, Result};
pub use hodge::HodgeMatrix;
pub use motive::{MotiveClass, SymMonomial};
pub use polyring::{BiPoly, IntPoly};
