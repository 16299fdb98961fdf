use clap::Parser;

fn main() {
    let cli = bezier_rac_cli::app::Cli::parse();
    std::process::exit(bezier_rac_cli::app::run(cli));
}
