use std::io::{BufRead, Write};

use super::cli::{EXIT_IO_ERROR, EXIT_OK};
use super::{eval_str, format_error, format_outcome, FormatOptions};

/// Reads statements line by line and prints one result per statement.
///
/// Blank lines and lines starting with `#` are skipped; `:quit` ends the
/// session. Evaluation errors go to `err` and the session continues. Returns
/// the process exit status.
pub fn run_repl<R, W, E>(input: R, out: &mut W, err: &mut E, opts: &FormatOptions, prompt: bool) -> i32
where
    R: BufRead,
    W: Write,
    E: Write,
{
    let mut lines = input.lines();
    loop {
        if prompt {
            let _ = write!(out, "> ");
            let _ = out.flush();
        }
        let line = match lines.next() {
            None => return EXIT_OK,
            Some(Ok(line)) => line,
            Some(Err(e)) => {
                let _ = writeln!(err, "input error: {e}");
                return EXIT_IO_ERROR;
            }
        };
        let stmt = line.trim();
        if stmt.is_empty() || stmt.starts_with('#') {
            continue;
        }
        if stmt == ":quit" {
            return EXIT_OK;
        }
        let written = match eval_str(stmt) {
            Ok(outcome) => writeln!(out, "{}", format_outcome(&outcome, opts)),
            Err(e) => writeln!(err, "{}", format_error(&e, opts)),
        };
        if written.is_err() {
            return EXIT_IO_ERROR;
        }
    }
}
