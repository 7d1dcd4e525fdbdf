use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(glnq::cli::run(std::env::args()) as u8)
}
