//! File formats and JSON reports for `besforge-core`, plus the `besforge`
//! command-line tool.

pub mod format;
pub mod report;
