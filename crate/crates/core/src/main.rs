fn main() {
    std::process::exit(popwilf::cli::main_from_env());
}
