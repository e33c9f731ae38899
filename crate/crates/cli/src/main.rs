use clap::Parser;

fn main() {
    let cli = hopf_jordan_cli::Cli::parse();
    let code = hopf_jordan_cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
