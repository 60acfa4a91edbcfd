//! Front end for the `remak` binary: input parsing, reports, the test
//! corpus and the oracle cross-check.

pub mod check;
pub mod commands;
pub mod corpus;
mod error;
pub mod input;
pub mod report;

pub use commands::{Options, Render};
pub use error::CliError;
