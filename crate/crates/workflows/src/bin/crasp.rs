fn main() {
    std::process::exit(workflows::cli::cli(std::env::args_os()));
}
