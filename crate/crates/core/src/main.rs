fn main() {
    std::process::exit(motive_calc::cli::main_with_args(std::env::args_os()));
}
