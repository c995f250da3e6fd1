//! Diagonal and dihedral invariants of normal forms and weighted projective points.

pub mod diagonal;
pub mod dihedral;
pub mod generators;
pub mod label;
pub mod octavic;
pub mod reconstruct;
pub mod tuple;

pub use diagonal::{diagonal_invariants, swap_conjugate, Monomial, Schema, SchemaKind};
pub use dihedral::{dihedral_invariants, extension_data, split_dihedral};
pub use generators::invariant_algebra_generators;
pub use label::{Key, Label};
pub use octavic::{octavic_dihedral, shioda_expr, OctavicInvariant};
pub use reconstruct::reconstruct;
pub use tuple::{wp_equal, wp_normalize, Entry, InvariantTuple};
