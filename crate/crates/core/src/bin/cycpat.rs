fn main() {
    std::process::exit(cycpat::cli::main());
}
