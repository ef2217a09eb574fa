fn main() {
    std::process::exit(stripharm::cli::run(std::env::args()));
}
