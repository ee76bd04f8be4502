fn main() {
    std::process::exit(lirr::frontend::cli::main());
}
