use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ptegkit::cli::run())
}
