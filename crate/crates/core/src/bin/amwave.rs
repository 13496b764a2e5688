fn main() {
    std::process::exit(amwave::cli::run(std::env::args_os()));
}
