use clap::Parser;

fn main() {
    let cli = iquandle_cli::Cli::parse();
    std::process::exit(iquandle_cli::run(cli));
}
