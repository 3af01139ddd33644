use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = grasscurv_cli::run(std::env::args_os().skip(1), &mut out);
    // `process::exit` skips destructors, so flush explicitly.
    let _ = out.flush();
    std::process::exit(code);
}
