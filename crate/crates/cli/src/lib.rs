//! Command-line front end: argument parsing, dispatch and the output envelope.

mod args;
mod commands;
mod output;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use output::{Envelope, Verdict, SCHEMA_VERSION};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFICATION: u8 = 2;

/// Environment variable overriding the K^MW degree window, as `A..B`.
pub const ENV_KMW_WINDOW: &str = "MOTSPC_KMW_WINDOW";
/// Environment variable overriding the Tate universe, as `T,S`.
pub const ENV_UNIVERSE: &str = "MOTSPC_UNIVERSE";

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `argv`, whose first item is the program name.
pub fn run<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Execution { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Execution { code: EXIT_USAGE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match commands::dispatch(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json { report.render_json() } else { report.render_text() };
            let code = if report.failed() { EXIT_VERIFICATION } else { EXIT_OK };
            Execution { code, stdout, stderr: String::new() }
        }
        Err(e) => Execution { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}
