use clap::Parser;
use suris::cli::{main_with_env, Cli};

fn main() {
    let cli = Cli::parse();
    std::process::exit(main_with_env(cli, &|name| std::env::var(name).ok()));
}
