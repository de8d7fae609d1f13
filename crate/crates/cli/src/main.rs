use clap::Parser;

use septree_cli::commands::{run, Cli};

fn main() {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
