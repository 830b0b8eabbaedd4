use std::io::Write;

fn main() {
    let result = braidforge::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(result.payload.as_bytes());
    let _ = stdout.flush();
    std::process::exit(result.exit_code);
}
