fn main() {
    std::process::exit(polarix::cli::run());
}
