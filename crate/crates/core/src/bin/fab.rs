fn main() {
    std::process::exit(abc_fab::cli::run(std::env::args_os()));
}
