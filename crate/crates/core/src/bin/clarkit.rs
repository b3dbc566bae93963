fn main() {
    std::process::exit(clarkit::cli::main());
}
