use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::init();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = cyclic_vote::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
