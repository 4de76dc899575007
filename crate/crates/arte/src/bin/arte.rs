fn main() {
    std::process::exit(arte::cli::run(std::env::args_os()));
}
