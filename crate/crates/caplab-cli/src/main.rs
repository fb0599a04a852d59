use clap::Parser;

fn main() {
    let cli = caplab_cli::commands::Cli::parse();
    std::process::exit(caplab_cli::commands::run(cli));
}
