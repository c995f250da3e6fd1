//! Binary forms, the GL₂ substitution action and cyclic normal forms.

pub mod diag;
pub mod form;
pub mod mat;
pub mod normal;
pub mod poly;

pub use diag::{diagonalize_automorphism, diagonalize_involution};
pub use form::{act, proportional, BinaryForm};
pub use mat::Mat2;
pub use normal::{classify_normal_form, NormalForm, Shape};
