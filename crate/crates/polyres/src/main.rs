fn main() {
    std::process::exit(polyres::cli::run());
}
