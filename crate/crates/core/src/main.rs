use std::process::ExitCode;

fn main() -> ExitCode {
    let out = kgraph::cli::run_args(std::env::args_os(), &mut std::io::stdin());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    ExitCode::from(out.code as u8)
}
