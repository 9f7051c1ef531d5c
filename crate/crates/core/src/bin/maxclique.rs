fn main() {
    std::process::exit(maxclique::cli::run(std::env::args_os()));
}
