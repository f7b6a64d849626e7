use std::process::ExitCode;

fn main() -> ExitCode {
    lucas_euler::cli::run(std::env::args_os())
}
