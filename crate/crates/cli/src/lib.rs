//! Library side of the `altexp` binary, shared with its integration tests.

pub mod args;
mod commands;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command};

pub use commands::parse_points;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input.
    Usage(String),
    /// `verify` ran and this many checks failed.
    Verification(usize),
}

impl From<altexp::Error> for Failure {
    fn from(e: altexp::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Forward(a) => commands::forward(a),
        Command::Inverse(a) => commands::inverse(a),
        Command::Interpolate(a) => commands::interpolate(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Verification(count)) => {
            eprintln!("verification failed: {count} check(s) out of tolerance");
            EXIT_VERIFICATION
        }
    }
}
