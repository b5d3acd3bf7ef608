//! Identity components: restriction to the quantum subgroup cut out by a
//! subcategory, connectedness probes and normality verdicts.

pub mod connectedness;
pub mod report;
pub mod restriction;

pub use connectedness::{connectedness_probe, Connectedness, ConnectednessProbe};
pub use report::{
    adjoint_at_bound, identity_component_report, ComponentBounds, ComponentReport, ComponentVerdict, Finiteness,
    HomDimEntry, RestrictionEvidence, TorsionDegreeNote,
};
pub use restriction::{factor_restriction, restriction_hom_dim, s_part, s_part_of};
