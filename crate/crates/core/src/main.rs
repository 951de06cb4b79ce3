fn main() {
    std::process::exit(affchar::cli::main());
}
