use std::io::Write;

fn main() {
    let (code, stdout, stderr) = daws_cli::run_captured(std::env::args());
    if !stdout.is_empty() {
        print!("{}", stdout);
        let _ = std::io::stdout().flush();
    }
    if !stderr.is_empty() {
        eprint!("{}", stderr);
    }
    std::process::exit(code);
}
