fn main() {
    std::process::exit(softconvex::cli::run(std::env::args()));
}
