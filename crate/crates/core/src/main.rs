use std::process::ExitCode;

fn main() -> ExitCode {
    gini_mre::cli::main_with_args(std::env::args_os())
}
