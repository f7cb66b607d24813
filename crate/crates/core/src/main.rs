fn main() {
    std::process::exit(delta2::harness::cli::cli_dispatch(std::env::args_os()));
}
