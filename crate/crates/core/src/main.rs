fn main() {
    std::process::exit(vandersolve::cli::run(std::env::args_os()));
}
