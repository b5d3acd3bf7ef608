//! Fusion-ring abstraction: irreducible labels, decompositions, the ring of
//! virtual elements and the axiom harness.

pub mod axioms;
pub mod element;
pub mod label;
pub mod provider;

pub use axioms::{check_axioms, Axiom, AxiomOptions, AxiomReport, Violation};
pub use element::{Decomposition, VirtualElement};
pub use label::{AuLetter, FreeLetter, IrrLabel, Key, Syllable};
pub use provider::{Budget, FusionProvider, Order};

/// `ring_multiply` on two virtual elements.
pub fn ring_multiply(
    ring: &dyn FusionProvider,
    a: &VirtualElement,
    b: &VirtualElement,
) -> crate::Result<VirtualElement> {
    a.multiply(b, ring)
}
