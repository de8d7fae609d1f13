//! Library side of the command-line front end: fixtures, the classical
//! block-cut oracle, seeded random graphs, and the command runners.

#![forbid(unsafe_code)]

pub mod blockcut;
pub mod commands;
pub mod fixtures;
pub mod randgen;

pub use commands::{run, Cli, Command, Outcome};
