//! Exact descent machinery for hyperelliptic curves whose reduced automorphism
//! group is cyclic, over Q and quadratic towers above it.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod binforms;
pub mod counterexamples;
pub mod descent;
pub mod error;
pub mod invariants;
pub mod lattice;

pub use error::{Error, Result};
