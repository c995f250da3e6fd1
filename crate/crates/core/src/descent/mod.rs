//! Descent of hyperelliptic curves with cyclic reduced automorphism group.
pub mod case;
pub mod chain;
pub mod cocycle;
pub mod conic;
pub mod cover;
pub mod pipeline;
pub mod ternary;
pub mod weil;

pub use case::{classify_case, CaseDescriptor, GroupType};
pub use chain::{apply_chain, chain_reaches, Step};
pub use cocycle::{cocycle, torus_ratio, CocycleData, CocycleKind};
pub use conic::{conic_descend, conics_equivalent, phi_sigma_identity, ConicModel};
pub use cover::{cyclic_cover, pair_form, CoverData};
pub use pipeline::{
    descend, hyperelliptic_descend, normalize_input, shape_invariants, verify, verify_from_normal, weil_descend,
    Descent, DescentResult,
};
pub use ternary::TernaryForm;
pub use weil::{weil_matrix, weil_matrix_with, WeilData};
