fn main() {
    std::process::exit(circle_orbit::cli::run(std::env::args_os()));
}
