fn main() {
    std::process::exit(repkit::cli::main_with_args(std::env::args_os()));
}
