fn main() {
    std::process::exit(chartab::cli::run_cli(std::env::args_os()));
}
