fn main() {
    std::process::exit(mixed_moore::cli::main());
}
