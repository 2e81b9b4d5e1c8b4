use clap::Parser;

use snarkcrit::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(&config, &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
