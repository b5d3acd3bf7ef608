//! Exact fusion-ring computations for compact quantum groups: torsion
//! subcategories, identity components, closure sequences, dimension ideals,
//! and a numerical check of the negative-q real form of U_q(sl₂).

pub mod cli;
pub mod component;
pub mod error;
pub mod fusion;
pub mod providers;
pub mod report;
pub mod torsion;
pub mod uq;

pub use error::{FusionError, Result};
