use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = a1pic_cli::run(std::env::args_os().skip(1));
    let _ = std::io::stdout().write_all(report.stdout.as_bytes());
    let _ = std::io::stderr().write_all(report.stderr.as_bytes());
    ExitCode::from(report.status as u8)
}
