use std::io::{self, Write};

fn main() {
    let code = {
        let stdin = io::stdin();
        let mut stdout = io::stdout().lock();
        let mut stderr = io::stderr().lock();
        let mut io = gridpal::cli::Io {
            stdin: &mut stdin.lock(),
            stdout: &mut stdout,
            stderr: &mut stderr,
            budget_env: std::env::var(gridpal::cli::BUDGET_ENV).ok(),
        };
        let code = gridpal::cli::run(std::env::args_os(), &mut io);
        let _ = stdout.flush();
        code
    };
    std::process::exit(code);
}
