fn main() {
    std::process::exit(weak_ramsey::cli::main());
}
