fn main() {
    std::process::exit(oscillating_tableaux::cli::run(std::env::args_os()));
}
