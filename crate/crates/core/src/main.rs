fn main() {
    std::process::exit(su2_compose::cli::run(std::env::args_os()));
}
