use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin().lock();
    let status = infnat::calc::run_cli(std::env::args_os(), stdin, &mut io::stdout(), &mut io::stderr());
    ExitCode::from(status as u8)
}
