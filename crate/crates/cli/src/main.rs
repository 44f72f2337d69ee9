use std::process::ExitCode;

fn main() -> ExitCode {
    curlgraph_cli::run(std::env::args_os())
}
