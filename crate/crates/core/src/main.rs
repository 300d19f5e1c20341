fn main() {
    std::process::exit(weylbraid::cli::main_with_args(std::env::args_os()));
}
