fn main() {
    std::process::exit(shadowstates::cli::main());
}
