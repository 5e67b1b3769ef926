fn main() {
    std::process::exit(koszul_core::cli::main());
}
