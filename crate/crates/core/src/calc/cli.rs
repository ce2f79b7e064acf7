use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

use crate::bijections::Enumerator;

use super::{eval_str, format_error, format_outcome, run_repl, EvalOutcome, FormatOptions, OutputMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL_ERROR: i32 = 1;
pub const EXIT_SYNTAX_ERROR: i32 = 2;
pub const EXIT_BAD_FLAGS: i32 = 64;
pub const EXIT_IO_ERROR: i32 = 74;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Calculator for finite and infinite natural numbers.
///
/// With no flags, reads statements from standard input, one per line.
#[derive(Debug, Parser)]
#[command(name = "infnat", version)]
struct Args {
    /// Evaluate one statement and exit.
    #[arg(long, value_name = "STMT", conflicts_with = "dump_enum")]
    eval: Option<String>,

    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Print the first rows of an enumerator: union_fin[:n], diff[:n], union_kk, pairs, gaps.
    #[arg(long, value_name = "NAME")]
    dump_enum: Option<String>,

    /// Number of rows for --dump-enum.
    #[arg(long, default_value_t = 10, requires = "dump_enum")]
    count: u64,

    /// Minimum digit count when printing digit patterns.
    #[arg(long, default_value_t = 16)]
    digits_width: usize,

    /// Spell κ as "kappa".
    #[arg(long)]
    ascii: bool,

    /// Show a "> " prompt in the interactive loop.
    #[arg(long)]
    prompt: bool,
}

/// Runs the command line front end and returns the exit status.
pub fn run_cli<I, T, R, W, E>(args: I, stdin: R, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let (dest, code): (&mut dyn Write, i32) = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (out, EXIT_OK),
                _ => (err, EXIT_BAD_FLAGS),
            };
            let _ = write!(dest, "{}", e.render());
            return code;
        }
    };
    let opts = FormatOptions {
        mode: match args.format {
            Format::Text => OutputMode::Text,
            Format::Json => OutputMode::Json,
        },
        digits_width: args.digits_width,
        ascii: args.ascii,
    };

    if let Some(name) = &args.dump_enum {
        let which: Enumerator = match name.parse() {
            Ok(w) => w,
            Err(e) => {
                let _ = writeln!(err, "--dump-enum: {e}");
                return EXIT_BAD_FLAGS;
            }
        };
        return match which.rows(args.count) {
            Ok(rows) => {
                let _ = writeln!(out, "{}", format_outcome(&EvalOutcome::Table(rows), &opts));
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "--count: {e}");
                EXIT_BAD_FLAGS
            }
        };
    }

    if let Some(stmt) = &args.eval {
        return match eval_str(stmt) {
            Ok(outcome) => {
                let _ = writeln!(out, "{}", format_outcome(&outcome, &opts));
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "{}", format_error(&e, &opts));
                if e.is_syntax() {
                    EXIT_SYNTAX_ERROR
                } else {
                    EXIT_EVAL_ERROR
                }
            }
        };
    }

    run_repl(stdin, out, err, &opts, args.prompt)
}
