use std::process::ExitCode;

fn main() -> ExitCode {
    flagtop::cli::main()
}
