//! Torsion detection, closures of label sets, the N-sequence of a discrete
//! group, dimension-ideal recovery and ascending-chain probes.

pub mod chain;
pub mod closure;
pub mod dimideal;
pub mod lattice;
pub mod nsequence;
pub mod subcategory;
pub mod verdict;

pub use chain::{ascending_chain_probe, BalancedPowers, ChainReport, ChainStep, Constant, GeneratorSequence};
pub use closure::{
    central_closure, conjugate_action, generated_subring, normal_forcing_closure, normality_consistency,
    NormalityViolation,
};
pub use dimideal::{all_subrings, dimension_ideal_recover, DimensionIdealReport};
pub use lattice::Lattice;
pub use nsequence::{n_sequence_cocommutative, NSequenceReport, Stage, TorsionDegree};
pub use subcategory::{ClosureStatus, Subcategory, SubcategoryKind};
pub use verdict::{is_torsion, torsion_subcategory, LabelVerdict, TorsionReport, TorsionVerdict};
