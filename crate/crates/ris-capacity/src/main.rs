use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ris_capacity::cli::run(std::env::args_os()))
}
