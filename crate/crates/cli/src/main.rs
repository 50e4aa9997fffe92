use std::process::ExitCode;

fn main() -> ExitCode {
    jsearch_cli::run(std::env::args_os())
}
