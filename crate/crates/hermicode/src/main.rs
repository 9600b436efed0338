fn main() {
    std::process::exit(hermicode::cli::run());
}
