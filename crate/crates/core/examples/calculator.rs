//! Drives the calculator from code, in both output formats.
//!
//!     cargo run --example calculator
//!
//! The same statements work interactively with `cargo run --bin infnat`.

use infnat::calc::{eval_str, format_error, format_outcome, FormatOptions, OutputMode};

fn main() {
    let text = FormatOptions::default();
    let json = FormatOptions {
        mode: OutputMode::Json,
        ..text
    };
    let statements = [
        "K - K",
        "S(w)",
        "w-2 + o_1",
        "lim(n in L, pow2(n))",
        "xlim(n in M, n)",
        "w ~ o_1",
        "digits(w-3)",
        "3 - K",
    ];
    for stmt in statements {
        match eval_str(stmt) {
            Ok(o) => println!("{stmt:<22} {:<20} {}", format_outcome(&o, &text), format_outcome(&o, &json)),
            Err(e) => println!("{stmt:<22} {}", format_error(&e, &text)),
        }
    }
}
