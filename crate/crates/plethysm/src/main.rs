fn main() {
    std::process::exit(plethysm::cli::run(std::env::args_os()));
}
