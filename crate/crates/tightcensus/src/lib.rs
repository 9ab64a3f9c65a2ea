//! Reports, file formats and the command-line front end for the
//! `tightcensus-core` kernel.
//!
//! Every numeric field of a report is produced by a kernel call; this crate
//! only parses arguments, assembles JSON and renders tables.

pub mod args;
pub mod cli;
pub mod format;
pub mod report;
pub mod sweep;

pub use cli::{run, Outcome};
