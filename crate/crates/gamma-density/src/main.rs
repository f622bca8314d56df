fn main() {
    std::process::exit(gamma_density::cli::run(std::env::args_os()));
}
