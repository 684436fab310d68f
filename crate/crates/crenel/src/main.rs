fn main() {
    std::process::exit(crenel::cli::run());
}
