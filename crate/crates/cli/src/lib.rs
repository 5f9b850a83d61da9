//! Library half of the `aqt` command-line tool: subcommand implementations,
//! verification suites and their reports.

pub mod commands;
pub mod report;
pub mod suites;

use serde::Serialize;

pub use report::{Case, Status, VerificationReport};
pub use suites::{Bounds, Suite};

/// Serializes through `serde_json::Value`, whose maps are ordered, so keys
/// come out sorted and the bytes depend only on the value.
pub fn to_json(value: &impl Serialize, pretty: bool) -> serde_json::Result<String> {
    let v = serde_json::to_value(value)?;
    if pretty {
        serde_json::to_string_pretty(&v)
    } else {
        serde_json::to_string(&v)
    }
}
