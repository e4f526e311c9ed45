//! Command-line front end: instance files, DOT output, and dispatch to
//! `hypertree-core`.

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;

pub use commands::{run, Output};
