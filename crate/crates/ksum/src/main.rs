use std::process::ExitCode;

fn main() -> ExitCode {
    ksum::cli::main()
}
