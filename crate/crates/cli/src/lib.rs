//! Command implementations behind the `envelope-lab` binary.

pub mod commands;
pub mod examples;
pub mod report;

pub use report::{Format, Item, Report, RunConfig};
