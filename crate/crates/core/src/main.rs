use std::io::Write;

fn main() {
    let (code, out) = torus_cosets::cli::run(std::env::args_os(), &mut std::io::stdin());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
