use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout().lock();
    let code = seshadri::cli::run(&argv, &mut stdout);
    ExitCode::from(code as u8)
}
