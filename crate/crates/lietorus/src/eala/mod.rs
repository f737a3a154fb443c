//! Extended affine Lie algebras `E(L, D, κ)` built from a centerless Lie
//! torus `L`, a permissible subalgebra `D` of skew centroidal derivations and
//! an affine cocycle `κ`.

pub mod algebra;
pub mod axioms;
pub mod cocycle;
pub mod derivations;
pub mod lift;

pub use algebra::{EAtom, EalaAlgebra, EalaElem};
pub use axioms::eala_axiom_checks;
pub use cocycle::{validate_cocycle, AffineCocycle};
pub use derivations::{line_subspace, scder_action, sigma_d, DAtom, DKind, DSubalgebra, DualElement, SCDer, Subspace};
pub use lift::{
    centroid_eta, centroid_normalization, invariant_meet, is_D_invariant, is_pair_invariant, lift_involution,
    pair_invariance_report, verify_eala_involution, EalaInvolution, Lift,
};
