fn main() {
    std::process::exit(antiramsey::cli::run());
}
