//! The `lozenge` command line: argument handling, reports and rendering,
//! kept in a library so the exit-code contract can be tested in process.
//!
//! Exit status is 0 on success, 1 when a check fails (a nonzero residual,
//! a deviation out of tolerance) and 2 on usage errors or invalid
//! parameters. Exact numbers are always printed as strings.

mod args;
mod commands;
mod error;
mod output;
pub mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Format};
pub use error::CliError;
pub use render::{render, RenderSpec};

/// Exit status plus everything the command wrote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Run the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome { code: 2, stdout: String::new(), stderr: e.render().to_string() },
            }
        }
    };
    match commands::dispatch(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
