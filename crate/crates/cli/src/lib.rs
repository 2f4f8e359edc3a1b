//! The `parkspace` command line: one group, one verification, one report.

pub mod commands;
pub mod config;
pub mod report;

use std::io::Write;

use parkspace::Error;

pub use config::{Cli, Command, Format, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        Error::Unsupported { .. } | Error::NotCrystallographic(_) | Error::Capability(_) | Error::Invalid(_) => {
            EXIT_UNSUPPORTED
        }
        _ => EXIT_FAILED,
    }
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::parse_from(args) {
        Ok(Some(c)) => c,
        Ok(None) => {
            let _ = writeln!(err, "error: --group is required");
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(n) = config.threads {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::execute(&config) {
        Ok(report) => {
            let _ = out.write_all(report.render(&config).as_bytes());
            if report.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
