use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = dirichlet_cli::run(std::env::args().skip(1), &mut lock);
    let _ = lock.flush();
    std::process::exit(code);
}
