fn main() {
    std::process::exit(btt::cli::main());
}
