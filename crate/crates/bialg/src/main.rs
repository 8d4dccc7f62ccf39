use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = bialg::cli::run(&argv, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
