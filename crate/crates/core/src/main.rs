use clap::Parser;

fn main() {
    let cli = jordan_lie::cli::Cli::parse();
    let code = jordan_lie::cli::run(cli, &mut std::io::stdout().lock());
    std::process::exit(code);
}
