fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(permext::cli::run_cli_default(&args));
}
