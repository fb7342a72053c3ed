use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = chhs_cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(chhs_cli::EXIT_INPUT as u8);
    }
    let out = chhs_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
