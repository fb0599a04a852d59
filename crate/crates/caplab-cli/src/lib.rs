//! Command-line front end for the `caplab` library: channel-spec parsing,
//! capacity computation, parameter sweeps to CSV, and verification suites
//! to JSON reports.
//!
//! Output conventions: every bits-valued number is printed with six
//! decimal places and the suffix "bits"; CSV and JSON files are
//! byte-stable across identical invocations (same flags, same seed).
//! Errors go to standard error as single messages, never stack traces.
//! Exit codes: 0 success / all suites pass, 1 at least one suite failure,
//! 2 usage or input error.

pub mod commands;
mod error;
pub mod spec;

pub use error::CliError;
