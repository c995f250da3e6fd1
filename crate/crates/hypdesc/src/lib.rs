//! JSON documents and subcommands for the `hypdesc` tool.
//!
//! Exit codes: 0 success, 1 verification failed, 2 malformed input or flags,
//! 3 no cyclic normal form, 4 other mathematical failure, 10 hyperelliptic descent obstructed.

pub mod codec;
pub mod commands;
pub mod documents;

pub use codec::{DocError, DocResult};
pub use commands::*;
pub use documents::{descent_from_json, descent_to_json, FormDocument, SCHEMA_VERSION, TOOL, VERSION};
