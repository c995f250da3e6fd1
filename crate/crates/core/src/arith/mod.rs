//! Exact arithmetic over Q and quadratic towers.

pub mod hilbert;
pub mod integer;
pub mod modp;
pub mod norm;
pub mod tower;

pub type Rational = num_rational::BigRational;

pub use hilbert::{hilbert_symbol, Place};
pub use integer::{rational_sqrt as is_square, square_class, squarefree_core_int};
pub use norm::{hilbert90, is_norm, solve_norm};
pub use tower::{Elem, Tower};
