use std::process::ExitCode;

fn main() -> ExitCode {
    let code = genchar_cli::run_to(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code as u8)
}
