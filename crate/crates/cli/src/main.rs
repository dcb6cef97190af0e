use clap::Parser;
use degseq_cli::{run, Cli};

fn main() {
    let exit = run(Cli::parse());
    std::process::exit(exit as i32);
}
