fn main() {
    std::process::exit(voaplus::cli::run(std::env::args().collect()));
}
