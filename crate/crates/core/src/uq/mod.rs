//! Explicit matrices for U_q(sl₂) at real negative q: the representations
//! `π_{w,n}`, the unitary representations `u_{±n}` of the su(1,1) form,
//! numerical intertwiner spaces, and cross-checks against the symbolic
//! fusion rules.

pub mod checks;
pub mod intertwiner;
pub mod qint;
pub mod rep;

pub use checks::{
    flip, fusion_crosscheck, unitarizability_witness, uq_verify, verify_conjugate_equations,
    verify_permutation_intertwiner, ConjugateEquations, FusionCrosscheck, FusionEntry, ObstructionKind,
    PermutationCheck, RepCheck, StarForm, Unitarizability, UnitarizabilityCheck, UqVerifyReport,
};
pub use intertwiner::{intertwiner_space, IntertwinerSpace, IntertwinerSummary, DEFAULT_TOL, MIN_GAP};
pub use qint::{qint, QInt};
pub use rep::{build_pi, build_u, check_star, tensor_rep, Branch, Form, Mat, RelationResiduals, RepMatrices, StarCheck, Twist, TAU};
