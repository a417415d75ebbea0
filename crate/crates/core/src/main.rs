fn main() {
    std::process::exit(rsic::cli::run(std::env::args_os()));
}
