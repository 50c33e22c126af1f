fn main() {
    std::process::exit(pseudochar::cli::main_with_args(std::env::args_os()));
}
