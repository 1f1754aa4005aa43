fn main() {
    std::process::exit(w0_core::cli::main());
}
